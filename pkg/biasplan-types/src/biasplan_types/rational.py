"""
Exact numeric helpers shared by every model.

Costs, rewards and bias parameters are `fractions.Fraction` values. The only
non-rational quantity is the "no viable continuation" sentinel, which is
`math.inf` and compares above every Fraction.
"""

import math
import re
from fractions import Fraction
from typing import Annotated, Any, Union

from pydantic import PlainSerializer, PlainValidator

INFINITY = math.inf

_NUMBER = re.compile(r"^[+-]?\d+(?:/\d+|\.\d+)?$")

Number = Union[Fraction, int, str]


def parse_rational(value: Any) -> Fraction:
    """Convert an integer, a Fraction or a `p/q` / finite decimal literal exactly."""
    if isinstance(value, bool):
        raise ValueError(f"Invalid rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _NUMBER.match(text):
            raise ValueError(f"Invalid rational: {value!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ValueError(f"Invalid rational: {value!r} has a zero denominator")
    raise ValueError(f"Invalid rational: {value!r} is not an exact number")


def format_rational(value: Fraction | int) -> str:
    """Render as `p/q`, integers without a denominator."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_infinite(value: Any) -> bool:
    return isinstance(value, float) and math.isinf(value) and value > 0


def parse_cost(value: Any) -> Union[Fraction, float]:
    if is_infinite(value):
        return INFINITY
    if isinstance(value, str) and value.strip() == "inf":
        return INFINITY
    return parse_rational(value)


def format_cost(value: Union[Fraction, float]) -> str:
    if is_infinite(value):
        return "inf"
    return format_rational(value)


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
]

# A Rational or INFINITY.
Cost = Annotated[
    Union[Fraction, float],
    PlainValidator(parse_cost),
    PlainSerializer(format_cost, return_type=str, when_used="json"),
]
