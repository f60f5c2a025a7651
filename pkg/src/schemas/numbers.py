"""Exact number types and their JSON encoding.

Integers below 2^53 in absolute value are written as JSON numbers, larger ones
as decimal strings, so any JSON reader keeps them exact. Rationals are written
as ``{"num": a, "den": b}``.
"""
from enum import Enum
from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer, model_validator

JSON_SAFE_LIMIT = 2**53


def encode_int(value: int) -> int | str:
    """Encode an integer for JSON, switching to a decimal string past 2^53."""
    return value if abs(value) < JSON_SAFE_LIMIT else str(value)


def decode_int(value: Any) -> int:
    """Decode a JSON integer given as a number or a decimal string.

    Raises:
        ValueError: If the value is not an integer
    """
    if isinstance(value, bool):
        raise ValueError(f"Expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.strip().lstrip("+-").isdigit():
        return int(value)
    if isinstance(value, float) and value.is_integer() and abs(value) < JSON_SAFE_LIMIT:
        return int(value)
    raise ValueError(f"Expected an integer, got {value!r}")


BigInt = Annotated[int, BeforeValidator(decode_int), PlainSerializer(encode_int, when_used="json")]


class Sentinel(str, Enum):
    """Non-numeric results that must never be encoded as numbers."""

    ACYCLIC = "acyclic"
    INFINITE = "infinite"


class ExactRational(BaseModel):
    """Exact rational number in lowest terms.

    Attributes:
        num (int): Numerator
        den (int): Positive denominator, coprime to the numerator
    """

    model_config = ConfigDict(frozen=True)

    num: BigInt = Field(description="Numerator")
    den: BigInt = Field(description="Positive denominator")

    @model_validator(mode="after")
    def _check_lowest_terms(self) -> "ExactRational":
        if self.den <= 0:
            raise ValueError("denominator must be positive")
        if Fraction(self.num, self.den).denominator != self.den:
            raise ValueError(f"{self.num}/{self.den} is not in lowest terms")
        return self

    @classmethod
    def of(cls, value: Fraction | int) -> "ExactRational":
        """Build from a Fraction or an integer."""
        value = Fraction(value)
        return cls(num=value.numerator, den=value.denominator)

    @property
    def fraction(self) -> Fraction:
        """The value as a Fraction."""
        return Fraction(self.num, self.den)
