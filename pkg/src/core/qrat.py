"""
Coefficient Field Module
------------------------
Exact arithmetic in the rational function field Q(q).

Features:
- RatQ values backed by the sympy rational function field ZZ(q)
- Laurent printing ("2*q^3 - q^-1 + 5") and a bit-exact parser
- Quantum integers, factorials and binomials in any base q^d
- Taylor expansion at q = 1 in the parameter t = q - 1
"""

import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple, Union

from sympy import ZZ
from sympy.polys.fields import field

from core.errors import InvalidInputError, NotSpecializableError

# The one coefficient field used everywhere
QField, _Q = field("q", ZZ)
_RING = QField.ring

Scalar = Union["RatQ", int]


class RatQ:
    """Immutable element of Q(q) in reduced, sign-canonical form."""

    __slots__ = ("_f",)

    def __init__(self, value=0):
        """
        Initialize a coefficient.

        Args:
            value: int, Fraction, RatQ or a sympy FracElement of QField
        """
        if isinstance(value, RatQ):
            f = value._f
        elif isinstance(value, Fraction):
            f = QField(value.numerator) / QField(value.denominator)
        elif isinstance(value, int):
            f = QField(value)
        else:
            f = value
        if f.denom.LC < 0:
            f = QField.raw_new(-f.numer, -f.denom)
        self._f = f

    # ==================== CONSTRUCTORS ====================
    @staticmethod
    def q() -> "RatQ":
        return qpow(1)

    @staticmethod
    def from_laurent(terms: Dict[int, int]) -> "RatQ":
        """Build Σ c_e q^e from an exponent → integer map."""
        low = min(terms, default=0)
        shift = -low if low < 0 else 0
        numer = _RING.from_dict({(e + shift,): ZZ(c) for e, c in terms.items() if c})
        denom = _RING.from_dict({(shift,): ZZ(1)})
        return RatQ(QField.new(numer, denom))

    # ==================== ARITHMETIC ====================
    @staticmethod
    def _coerce(other) -> "RatQ":
        if isinstance(other, RatQ):
            return other
        if isinstance(other, (int, Fraction)):
            return RatQ(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatQ(self._f + other._f)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatQ(self._f - other._f)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatQ(other._f - self._f)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatQ(self._f * other._f)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("division by zero in Q(q)")
        return RatQ(self._f / other._f)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return RatQ(-self._f)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0 and not self:
            raise ZeroDivisionError("zero to a negative power")
        return RatQ(self._f ** n)

    def inverse(self) -> "RatQ":
        return RatQ(1) / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._f == other._f

    def __hash__(self):
        return hash((self._f.numer, self._f.denom))

    def __bool__(self):
        return bool(self._f.numer)

    # ==================== STRUCTURE ====================
    @property
    def numer(self) -> Dict[int, int]:
        return {m[0]: int(c) for m, c in self._f.numer.terms()}

    @property
    def denom(self) -> Dict[int, int]:
        return {m[0]: int(c) for m, c in self._f.denom.terms()}

    def is_laurent(self) -> bool:
        """True when the denominator is a monic monomial q^k."""
        den = self._f.denom.terms()
        return len(den) == 1 and int(den[0][1]) == 1

    def laurent_terms(self) -> Dict[int, int]:
        """Exponent → coefficient map; only valid for Laurent polynomials."""
        if not self.is_laurent():
            raise InvalidInputError(f"{self} is not a Laurent polynomial")
        shift = self._f.denom.terms()[0][0][0]
        return {m[0] - shift: int(c) for m, c in self._f.numer.terms()}

    def value_at_one(self) -> Fraction:
        """Specialization f(1); raises when q = 1 is a pole."""
        den = sum(self.denom.values())
        if den == 0:
            raise NotSpecializableError(f"{self} has a pole at q = 1", self)
        return Fraction(sum(self.numer.values()), den)

    # ==================== TEXT FORM ====================
    def __str__(self) -> str:
        if self.is_laurent():
            return _format_terms(self.laurent_terms())
        return f"({_format_terms(self.numer)})/({_format_terms(self.denom)})"

    def __repr__(self) -> str:
        return f"RatQ({str(self)!r})"

    @staticmethod
    def parse(text: str) -> "RatQ":
        """Parse the printed form; accepts "(num)/(den)" and bare Laurent sums."""
        s = text.strip()
        if not s:
            raise InvalidInputError("empty coefficient")
        split = _top_level_index(s, "/")
        if split is not None:
            left, right = s[:split], s[split + 1:]
            return RatQ.parse(left) / RatQ.parse(right)
        if s.startswith("(") and _matching_paren(s, 0) == len(s) - 1:
            return RatQ.parse(s[1:-1])
        return RatQ.from_laurent(_parse_terms(s))


_TERM = re.compile(r"([+-]?)(?:(\d+)\*)?q(?:\^(-?\d+))?|([+-]?)(\d+)")


def _parse_terms(s: str) -> Dict[int, int]:
    compact = s.replace(" ", "")
    pos = 0
    terms: Dict[int, int] = {}
    while pos < len(compact):
        m = _TERM.match(compact, pos)
        if m is None or m.end() == pos:
            raise InvalidInputError(f"cannot parse coefficient {s!r} at offset {pos}")
        if m.group(5) is not None:
            sign, coeff, exp = m.group(4), int(m.group(5)), 0
        else:
            sign = m.group(1)
            coeff = int(m.group(2)) if m.group(2) else 1
            exp = int(m.group(3)) if m.group(3) is not None else 1
        if pos > 0 and not sign:
            raise InvalidInputError(f"missing operator in {s!r}")
        if sign == "-":
            coeff = -coeff
        terms[exp] = terms.get(exp, 0) + coeff
        pos = m.end()
    return {e: c for e, c in terms.items() if c}


def _format_terms(terms: Dict[int, int]) -> str:
    if not terms:
        return "0"
    parts: List[str] = []
    for i, e in enumerate(sorted(terms, reverse=True)):
        c = terms[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "q" if e == 1 else f"q^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def _matching_paren(s: str, start: int) -> int:
    depth = 0
    for i in range(start, len(s)):
        if s[i] == "(":
            depth += 1
        elif s[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise InvalidInputError(f"unbalanced parentheses in {s!r}")


def _top_level_index(s: str, char: str):
    depth = 0
    for i, c in enumerate(s):
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
        elif c == char and depth == 0:
            return i
    return None


# ==================== QUANTUM NUMBERS ====================
ZERO = RatQ(0)
ONE = RatQ(1)


@lru_cache(maxsize=None)
def qpow(k: int) -> RatQ:
    """q^k."""
    return RatQ.from_laurent({k: 1})


def hbar(d: int = 1) -> RatQ:
    """q^d - q^-d; h = hbar() throughout."""
    return qpow(d) - qpow(-d)


@lru_cache(maxsize=None)
def qint(n: int, v_exponent: int = 1) -> RatQ:
    """[n]_v with v = q^d."""
    if n < 0:
        raise InvalidInputError(f"quantum integer needs n >= 0, got {n}")
    if v_exponent <= 0:
        raise InvalidInputError("v_exponent must be positive")
    return RatQ.from_laurent({v_exponent * (n - 1 - 2 * k): 1 for k in range(n)})


@lru_cache(maxsize=None)
def qfactorial(n: int, v_exponent: int = 1) -> RatQ:
    """[n]_v! = [1]_v [2]_v ... [n]_v."""
    result = ONE
    for k in range(1, n + 1):
        result = result * qint(k, v_exponent)
    return result


def qbinom(n: int, m: int, v_exponent: int = 1) -> RatQ:
    """Gaussian binomial [n choose m]_v."""
    if m < 0 or m > n:
        return ZERO
    return qfactorial(n, v_exponent) / (qfactorial(m, v_exponent) * qfactorial(n - m, v_exponent))


# ==================== SPECIALIZATION ====================
def _shift_to_one(coeffs: Dict[int, int], order: int) -> List[int]:
    """Coefficients of p(1 + t) up to t^order."""
    out = [0] * (order + 1)
    for e, c in coeffs.items():
        for k in range(min(e, order) + 1):
            out[k] += c * comb(e, k)
    return out


def taylor_at_1(f: RatQ, order: int) -> List[Fraction]:
    """
    Expand f(1 + t) = Σ a_k t^k up to t^order.

    Args:
        f: Coefficient without a pole at q = 1
        order: Highest power of t kept

    Returns:
        [a_0, ..., a_order] as exact fractions

    Raises:
        NotSpecializableError: if the denominator vanishes at q = 1
    """
    if order < 0:
        raise InvalidInputError("order must be non-negative")
    num = _shift_to_one(f.numer, order)
    den = _shift_to_one(f.denom, order)
    if den[0] == 0:
        raise NotSpecializableError(f"{f} has a pole at q = 1", f)
    inv: List[Fraction] = [Fraction(1, den[0])]
    for k in range(1, order + 1):
        acc = sum(den[j] * inv[k - j] for j in range(1, k + 1))
        inv.append(-Fraction(acc) / den[0])
    return [sum((num[j] * inv[k - j] for j in range(k + 1)), Fraction(0)) for k in range(order + 1)]


def as_ratq(value: Scalar) -> RatQ:
    return value if isinstance(value, RatQ) else RatQ(value)


def degree_span(f: RatQ) -> Tuple[int, int]:
    """(lowest, highest) exponent of a Laurent coefficient."""
    terms = f.laurent_terms()
    return min(terms), max(terms)
