"""
Instance file loading.
Handles the line-oriented graph format (.tg) and the JSON model tree (.json).
"""

from pathlib import Path
from typing import Union

from biasplan_types import Instance

from ..core.errors import GraphParseError
from ..core.graph import validate
from .graph_file import parse_graph, serialize_graph

ALLOWED_EXTENSIONS = [".tg", ".json"]


def _extension(path: Union[str, Path]) -> str:
    file_ext = Path(path).suffix.lower()
    if file_ext not in ALLOWED_EXTENSIONS:
        raise GraphParseError(
            f"Unsupported file format: {file_ext or '(none)'}. Only those files extensions are supported: {', '.join(ALLOWED_EXTENSIONS)}"
        )
    return file_ext


def load_instance(path: Union[str, Path]) -> Instance:
    file_ext = _extension(path)
    text = Path(path).read_text(encoding="utf-8")
    if file_ext == ".tg":
        return parse_graph(text)
    try:
        instance = Instance.model_validate_json(text)
    except ValueError as e:
        raise GraphParseError(f"Failed to parse JSON instance: {e}")
    validate(instance.graph)
    return instance


def save_instance(instance: Instance, path: Union[str, Path]) -> None:
    file_ext = _extension(path)
    if file_ext == ".tg":
        content = serialize_graph(instance)
    else:
        content = instance.model_dump_json(indent=2) + "\n"
    Path(path).write_text(content, encoding="utf-8")
