"""
Univariate rational functions over the rationals.

A RatFunc is kept in canonical form: numerator and denominator are coprime
polynomials in the formal parameter and the denominator is monic, so two
RatFuncs are equal exactly when their stored polynomials are equal.
Polynomial arithmetic and gcds come from sympy's sparse polynomial rings.
"""

import math
import re
from typing import List, Tuple

from sympy import QQ
from sympy.polys.rings import PolyElement, ring

from configs.settings import settings
from scalars.errors import PoleError, ScalarParseError

POLY_RING, ALPHA = ring(settings.SYMBOL_NAME, QQ)


class RatFunc:
    """
    Reduced quotient of two polynomials in the formal parameter.

    Build instances with ``ratfunc_reduce``; the constructor trusts its
    arguments to be canonical already.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: PolyElement, den: PolyElement):
        self.num = num
        self.den = den

    # ── constructors ─────────────────────────────────────────────────────

    @classmethod
    def constant(cls, value) -> "RatFunc":
        return ratfunc_reduce(POLY_RING(value), POLY_RING.one)

    @classmethod
    def generator(cls) -> "RatFunc":
        return cls(ALPHA, POLY_RING.one)

    # ── field operations ─────────────────────────────────────────────────

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.den == other.den:
            return ratfunc_reduce(self.num + other.num, self.den)
        return ratfunc_reduce(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if self.is_zero() or other.is_zero():
            return RatFunc(POLY_RING.zero, POLY_RING.one)
        return ratfunc_reduce(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return ratfunc_reduce(self.num * other.den, self.den * other.num)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.is_ground and self.den.is_ground

    def constant_value(self):
        """Rational value of a constant RatFunc (denominator is 1)."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.LC if self.num else QQ.zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({format_ratfunc(self)})"

    def __str__(self) -> str:
        return format_ratfunc(self)


def ratfunc_reduce(num, den) -> RatFunc:
    """
    Cancel the gcd of ``num`` and ``den`` and make the denominator monic.

    Raises
    ------
    ZeroDivisionError
        If ``den`` is the zero polynomial.
    """
    num = POLY_RING(num)
    den = POLY_RING(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return RatFunc(POLY_RING.zero, POLY_RING.one)

    num, den = num.cancel(den)
    lead = den.LC
    if lead != QQ.one:
        num = num.quo_ground(lead)
        den = den.quo_ground(lead)
    return RatFunc(num, den)


def evaluate_at(f: RatFunc, a):
    """Evaluate ``f`` at the rational ``a``; raises PoleError at a pole."""
    a = QQ.convert(a)
    den = f.den.evaluate(ALPHA, a)
    if den == QQ.zero:
        raise PoleError(f"{f} has a pole at {a}")
    return f.num.evaluate(ALPHA, a) / den


# ──────────────────────────────────────────────────────────────────────────
# Text form
# ──────────────────────────────────────────────────────────────────────────

def _coefficients(p: PolyElement) -> List[Tuple[int, object]]:
    return sorted((monom[0], coeff) for monom, coeff in p.terms())


def _integer_normalised(f: RatFunc) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """Scale num/den to coprime integer coefficients, positive leading denominator."""
    num_terms = _coefficients(f.num)
    den_terms = _coefficients(f.den)
    coeffs = [c for _, c in num_terms + den_terms]

    scale = 1
    for c in coeffs:
        scale = math.lcm(scale, int(c.denominator))
    ints = [int(c.numerator) * (scale // int(c.denominator)) for c in coeffs]
    content = 0
    for c in ints:
        content = math.gcd(content, c)
    content = content or 1

    split = len(num_terms)
    num = [(k, c // content) for (k, _), c in zip(num_terms, ints[:split])]
    den = [(k, c // content) for (k, _), c in zip(den_terms, ints[split:])]
    return num, den


def _format_poly(terms: List[Tuple[int, int]]) -> str:
    if not terms:
        return "0"
    symbol = settings.SYMBOL_NAME
    pieces = []
    for position, (power, coeff) in enumerate(terms):
        magnitude = abs(coeff)
        if power == 0:
            body = str(magnitude)
        else:
            monomial = symbol if power == 1 else f"{symbol}**{power}"
            body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
        if position == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces)


def format_ratfunc(f: RatFunc) -> str:
    """Render as ``poly`` or ``(poly)/(poly)`` with ascending powers."""
    if f.is_zero():
        return "0"
    num, den = _integer_normalised(f)
    if den == [(0, 1)]:
        return _format_poly(num)
    return f"({_format_poly(num)})/({_format_poly(den)})"


_QUOTIENT = re.compile(r"^\((?P<num>[^()]*)\)/\((?P<den>[^()]*)\)$")
_TERM = re.compile(r"[+-]?[^+-]+")
_MONOMIAL = re.compile(
    rf"^(?:(?P<coeff>\d+(?:/\d+)?)\*)?{re.escape(settings.SYMBOL_NAME)}(?:\*\*(?P<power>\d+))?$"
)


def _parse_rational(text: str):
    if "/" in text:
        p, q = text.split("/", 1)
        return QQ(int(p), int(q))
    return QQ(int(text))


def _parse_poly(text: str) -> PolyElement:
    compact = text.replace(" ", "")
    if not compact:
        raise ScalarParseError("empty polynomial")
    result = POLY_RING.zero
    for term in _TERM.findall(compact):
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        match = _MONOMIAL.match(body)
        if match is None:
            result += POLY_RING(sign * _parse_rational(body))
            continue
        coeff = _parse_rational(match["coeff"]) if match["coeff"] else QQ.one
        power = int(match["power"]) if match["power"] else 1
        result += POLY_RING.from_dict({(power,): sign * coeff})
    return result


def parse_ratfunc(text: str) -> RatFunc:
    """Inverse of ``format_ratfunc`` (also accepts plain rationals)."""
    text = text.strip()
    try:
        match = _QUOTIENT.match(text)
        if match:
            return ratfunc_reduce(_parse_poly(match["num"]), _parse_poly(match["den"]))
        return ratfunc_reduce(_parse_poly(text), POLY_RING.one)
    except ScalarParseError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ScalarParseError(f"cannot parse rational function {text!r}: {exc}") from exc
