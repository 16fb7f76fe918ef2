"""
Exact scalars in one of two field modes.

RATIONAL scalars wrap sympy ``QQ`` elements; SYMBOLIC scalars wrap
RatFunc values in the formal parameter. Arithmetic between the two modes
is refused so that an algebra built over one field never silently leaks
into the other.
"""

import re
from enum import Enum

from sympy import QQ

from scalars.errors import ScalarModeError, ScalarParseError
from scalars.ratfunc import RatFunc, evaluate_at, format_ratfunc, parse_ratfunc


class FieldMode(str, Enum):
    RATIONAL = "rational"
    SYMBOLIC = "symbolic"


_RATIONAL_TEXT = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?$")


class Scalar:
    """
    An immutable exact field element tagged with its field mode.

    Supports ``+ - * /`` and unary minus against Scalars of the same mode
    and against plain ints (coerced into the same mode).
    """

    __slots__ = ("mode", "value")

    def __init__(self, mode: FieldMode, value):
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # ── constructors ─────────────────────────────────────────────────────

    @classmethod
    def rational(cls, p: int, q: int = 1) -> "Scalar":
        return cls(FieldMode.RATIONAL, QQ(p, q))

    @classmethod
    def symbol(cls) -> "Scalar":
        """The formal parameter alpha."""
        return cls(FieldMode.SYMBOLIC, RatFunc.generator())

    @classmethod
    def constant(cls, mode: FieldMode, p: int, q: int = 1) -> "Scalar":
        if mode == FieldMode.RATIONAL:
            return cls.rational(p, q)
        return cls(FieldMode.SYMBOLIC, RatFunc.constant(QQ(p, q)))

    @classmethod
    def zero(cls, mode: FieldMode) -> "Scalar":
        return cls.constant(mode, 0)

    @classmethod
    def one(cls, mode: FieldMode) -> "Scalar":
        return cls.constant(mode, 1)

    # ── arithmetic ───────────────────────────────────────────────────────

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.mode != self.mode:
                raise ScalarModeError(
                    f"cannot combine {self.mode.value} and {other.mode.value} scalars"
                )
            return other
        if isinstance(other, int):
            return Scalar.constant(self.mode, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.mode, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.mode, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.mode, other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.mode, self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError(f"division of {self} by zero")
        return Scalar(self.mode, self.value / other.value)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self) -> "Scalar":
        return Scalar(self.mode, -self.value)

    def is_zero(self) -> bool:
        if self.mode == FieldMode.RATIONAL:
            return self.value == QQ.zero
        return self.value.is_zero()

    def is_one(self) -> bool:
        return self == Scalar.one(self.mode)

    # ── comparison ───────────────────────────────────────────────────────

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Scalar.constant(self.mode, other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.mode != self.mode:
            raise ScalarModeError(
                f"cannot compare {self.mode.value} and {other.mode.value} scalars"
            )
        return self.value == other.value

    def __hash__(self) -> int:
        return hash((self.mode, self.value))

    def __lt__(self, other: "Scalar") -> bool:
        if self.mode != FieldMode.RATIONAL or other.mode != FieldMode.RATIONAL:
            raise ScalarModeError("only rational scalars are ordered")
        return self.value < other.value

    # ── conversions ──────────────────────────────────────────────────────

    def specialise(self, a) -> "Scalar":
        """Substitute the rational ``a`` for alpha; rational scalars pass through."""
        if self.mode == FieldMode.RATIONAL:
            return self
        if isinstance(a, Scalar):
            a = a.value
        return Scalar(FieldMode.RATIONAL, evaluate_at(self.value, a))

    def is_rational_constant(self) -> bool:
        return self.mode == FieldMode.RATIONAL or self.value.is_constant()

    def to_rational(self) -> "Scalar":
        """Rational Scalar equal to this constant."""
        if self.mode == FieldMode.RATIONAL:
            return self
        return Scalar(FieldMode.RATIONAL, self.value.constant_value())

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({self.mode.value}, {format_scalar(self)})"


def format_rational(value) -> str:
    numerator, denominator = int(value.numerator), int(value.denominator)
    return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"


def format_scalar(s: Scalar) -> str:
    if s.mode == FieldMode.RATIONAL:
        return format_rational(s.value)
    return format_ratfunc(s.value)


def parse_rational(text: str) -> Scalar:
    """Parse ``"p"`` or ``"p/q"``; raises ScalarParseError on malformed input or q = 0."""
    match = _RATIONAL_TEXT.match(text)
    if not match:
        raise ScalarParseError(f"not a rational number: {text!r}")
    p = int(match.group(1))
    q = int(match.group(2)) if match.group(2) is not None else 1
    if q == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return Scalar.rational(p, q)


def parse_scalar(text: str, mode: FieldMode) -> Scalar:
    if mode == FieldMode.RATIONAL:
        return parse_rational(text)
    return Scalar(FieldMode.SYMBOLIC, parse_ratfunc(text))


def scalar_sum(values, mode: FieldMode) -> Scalar:
    total = Scalar.zero(mode)
    for value in values:
        total = total + value
    return total
