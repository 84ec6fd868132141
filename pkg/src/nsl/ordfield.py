"""Exact arithmetic in Q(X), the ordered field of rational functions.

Elements are quotients of polynomials with rational coefficients, kept in
canonical form: numerator and denominator coprime, denominator monic.  The
order makes X larger than every rational, so 1/X is a positive infinitesimal
and X a positive infinite element.  All arithmetic is exact; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "Polynomial",
    "RationalFunction",
    "ZERO",
    "ONE",
    "X",
    "embed_rational",
    "add",
    "sub",
    "mul",
    "div",
    "neg",
    "sign",
    "compare",
    "is_infinitesimal",
    "is_finite",
    "infinitely_close",
    "roughly_le",
    "standard_part",
]


def _as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class Polynomial:
    """Univariate polynomial over Q.

    Coefficients are stored ascending by degree with a nonzero last entry;
    the zero polynomial is the empty tuple.  Build through make() so the
    invariant holds.
    """

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def make(coeffs) -> "Polynomial":
        cs = [_as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Polynomial(tuple(cs))

    @property
    def degree(self) -> int:
        # zero polynomial gets -1 so degree comparisons stay uniform
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        while out and out[-1] == 0:
            out.pop()
        return Polynomial(tuple(out))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return _P_ZERO
        if len(self.coeffs) == 1:
            return other.scale(self.coeffs[0])
        if len(other.coeffs) == 1:
            return self.scale(other.coeffs[0])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def scale(self, k: Fraction) -> "Polynomial":
        if k == 0:
            return _P_ZERO
        return Polynomial(tuple(c * k for c in self.coeffs))

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lc = self.leading()
        return self if lc == 1 else self.scale(1 / lc)

    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Long division: self == q * divisor + r with deg(r) < deg(divisor)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        dd = divisor.degree
        if self.degree < dd:
            return _P_ZERO, self
        rem = list(self.coeffs)
        lead = divisor.leading()
        q = [Fraction(0)] * (self.degree - dd + 1)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + dd]
            if c == 0:
                continue
            f = c / lead
            q[k] = f
            for j, dj in enumerate(divisor.coeffs):
                rem[k + j] -= f * dj
        while rem and rem[-1] == 0:
            rem.pop()
        return Polynomial(tuple(q)), Polynomial(tuple(rem))


_P_ZERO = Polynomial(())
_P_ONE = Polynomial((Fraction(1),))
_P_X = Polynomial((Fraction(0), Fraction(1)))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm (zero when both inputs are zero)."""
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic()


@dataclass(frozen=True, slots=True, repr=False)
class RationalFunction:
    """Element of Q(X) in canonical form (coprime parts, monic denominator).

    Canonical form makes structural equality agree with field equality, so
    the dataclass __eq__/__hash__ are the semantic ones.  Build through
    make() so the invariant holds.
    """

    num: Polynomial
    den: Polynomial

    @staticmethod
    def make(num: Polynomial, den: Polynomial = _P_ONE) -> "RationalFunction":
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(X)")
        if num.is_zero():
            return ZERO
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, _ = num.divmod(g)
            den, _ = den.divmod(g)
        lc = den.leading()
        if lc != 1:
            k = 1 / lc
            num = num.scale(k)
            den = den.scale(k)
        return RationalFunction(num, den)

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction.make(
            self.num * o.den + o.num * self.den, self.den * o.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction.make(
            self.num * o.den - o.num * self.den, self.den * o.den
        )

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction.make(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction.make(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return RationalFunction.make(self.den, self.num) ** (-exponent)
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __lt__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return compare(self, o) < 0

    def __le__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return compare(self, o) <= 0

    def __gt__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return compare(self, o) > 0

    def __ge__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return compare(self, o) >= 0

    def __repr__(self):
        try:
            from .syntax import format_elem

            return format_elem(self)
        except ImportError:  # during partial imports, fall back to raw parts
            return f"RationalFunction({self.num.coeffs!r}, {self.den.coeffs!r})"

    __str__ = __repr__


ZERO = RationalFunction(_P_ZERO, _P_ONE)
ONE = RationalFunction(_P_ONE, _P_ONE)
X = RationalFunction(_P_X, _P_ONE)


def _coerce(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (int, Fraction)):
        return embed_rational(value)
    return None


def embed_rational(q) -> RationalFunction:
    """Embed a rational number as a constant element of Q(X)."""
    q = _as_rational(q)
    if q == 0:
        return ZERO
    return RationalFunction(Polynomial((q,)), _P_ONE)


def add(r: RationalFunction, s: RationalFunction) -> RationalFunction:
    return r + s


def sub(r: RationalFunction, s: RationalFunction) -> RationalFunction:
    return r - s


def mul(r: RationalFunction, s: RationalFunction) -> RationalFunction:
    return r * s


def div(r: RationalFunction, s: RationalFunction) -> RationalFunction:
    return r / s


def neg(r: RationalFunction) -> RationalFunction:
    return -r


def sign(r: RationalFunction) -> int:
    """Sign of r: the sign of the leading numerator coefficient.

    Valid because the denominator is monic, hence positive for large X.
    """
    if r.num.is_zero():
        return 0
    return 1 if r.num.leading() > 0 else -1


# Comparison predicates work on the unreduced cross-multiplied difference:
# num = r.num*s.den - s.num*r.den over the monic (positive) denominator
# r.den*s.den.  Sign and the degree *deficit* of a fraction are unchanged by
# gcd cancellation, so no gcd is ever needed here.  These run in tight loops.


def _cross_num(r: RationalFunction, s: RationalFunction) -> Polynomial:
    return r.num * s.den - s.num * r.den


def compare(r: RationalFunction, s: RationalFunction) -> int:
    """Three-way order comparison: -1, 0, or 1."""
    d = _cross_num(r, s)
    if d.is_zero():
        return 0
    return 1 if d.leading() > 0 else -1


def is_infinitesimal(r: RationalFunction) -> bool:
    """True when |r| is below every positive rational (zero counts)."""
    return r.num.is_zero() or r.num.degree < r.den.degree


def is_finite(r: RationalFunction) -> bool:
    """True when |r| is below some rational."""
    return r.num.is_zero() or r.num.degree <= r.den.degree


def infinitely_close(r: RationalFunction, s: RationalFunction) -> bool:
    """True when r - s is infinitesimal."""
    d = _cross_num(r, s)
    return d.is_zero() or d.degree < r.den.degree + s.den.degree


def roughly_le(r: RationalFunction, s: RationalFunction) -> bool:
    """True when r < s, r == s, or r is infinitely close to s."""
    d = _cross_num(r, s)
    if d.is_zero():
        return True
    return d.leading() < 0 or d.degree < r.den.degree + s.den.degree


def standard_part(r: RationalFunction) -> Fraction:
    """The unique rational infinitely close to a finite r.

    Raises ValueError on infinite elements, which have no standard part.
    """
    if not is_finite(r):
        raise ValueError(f"standard part of an infinite element: {r!r}")
    if r.num.is_zero() or r.num.degree < r.den.degree:
        return Fraction(0)
    return r.num.leading()  # denominator is monic
