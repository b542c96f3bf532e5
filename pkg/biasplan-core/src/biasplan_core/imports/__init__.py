from .file_parser import ALLOWED_EXTENSIONS, load_instance, save_instance
from .graph_file import parse_graph, serialize_graph
from .trace_record import (
    format_trace_json,
    format_trace_record,
    format_trace_text,
    parse_trace_record,
)

__all__ = [
    "ALLOWED_EXTENSIONS",
    "format_trace_json",
    "format_trace_record",
    "format_trace_text",
    "load_instance",
    "parse_graph",
    "parse_trace_record",
    "save_instance",
    "serialize_graph",
]
