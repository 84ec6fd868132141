"""Generalized intervals and their finite unions over Q(X).

A generalized interval couples each endpoint with a bound kind: closed
(x >= a), open (x > a), or rough (x > a, or x infinitely close to a).
Rough bounds make monad fringes honest intervals: "everything infinitely
close to 1/2 from below" is expressible here, while no ordinary interval
captures it.  An NSet is a finite union of such intervals kept in a normal
form (anchored rough bounds, sorted, gaps nonempty), chosen so structural
equality coincides with set equality.

A fourth kind, sharp (x > a and x not close to a), is the complement of a
rough bound.  It never appears in a stored interval; it only powers gap and
emptiness tests.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .ordfield import (
    ONE,
    X,
    ZERO,
    RationalFunction,
    compare,
    embed_rational,
    infinitely_close,
    is_finite,
    is_infinitesimal,
    roughly_le,
    sign,
    standard_part,
)

__all__ = [
    "Kind",
    "EmptyIntervalError",
    "GenInterval",
    "NSet",
    "EMPTY",
    "as_elem",
    "interval",
    "singleton",
    "points",
    "unit_interval",
    "padded_unit_interval",
    "monad",
    "left_monad",
    "right_monad",
    "union",
    "is_subset",
    "set_eq",
    "contains",
    "clamp_to_unit",
    "probe_points",
    "Witness",
    "BetterBound",
    "refute_infimum",
    "refute_supremum",
    "verify_refutation",
]


class Kind(enum.Enum):
    CLOSED = "closed"
    OPEN = "open"
    ROUGH = "rough"
    SHARP = "sharp"  # internal: complement of ROUGH, never stored


class EmptyIntervalError(ValueError):
    """Raised when a pair of bound predicates admits no point at all."""


def as_elem(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (int, Fraction)):
        return embed_rational(value)
    raise TypeError(f"expected a field element, got {type(value).__name__}")


def _lower_holds(v: RationalFunction, kind: Kind, x: RationalFunction) -> bool:
    c = compare(x, v)
    if kind is Kind.CLOSED:
        return c >= 0
    if kind is Kind.OPEN:
        return c > 0
    if kind is Kind.ROUGH:
        return c > 0 or infinitely_close(x, v)
    return c > 0 and not infinitely_close(x, v)


def _upper_holds(v: RationalFunction, kind: Kind, x: RationalFunction) -> bool:
    c = compare(x, v)
    if kind is Kind.CLOSED:
        return c <= 0
    if kind is Kind.OPEN:
        return c < 0
    if kind is Kind.ROUGH:
        return c < 0 or infinitely_close(x, v)
    return c < 0 and not infinitely_close(x, v)


def _nonempty(lv, lk: Kind, hv, hk: Kind) -> bool:
    """Is any point admitted by lower (lv, lk) together with upper (hv, hk)?

    Case split on how the bound values relate.  Sharp kinds only survive
    when the bounds are appreciably apart; rough kinds reach across a whole
    monad, so they tolerate bounds in inverted order as long as the values
    stay infinitely close.
    """
    c = compare(lv, hv)
    close = infinitely_close(lv, hv)
    if c < 0 and not close:
        return True
    if lk is Kind.SHARP or hk is Kind.SHARP:
        return False
    if c < 0:
        return True  # the midpoint satisfies every non-sharp combination
    if c == 0:
        if lk is Kind.ROUGH or hk is Kind.ROUGH:
            return True
        return lk is Kind.CLOSED and hk is Kind.CLOSED
    if close:
        return lk is Kind.ROUGH or hk is Kind.ROUGH
    return False


# Lower predicates form a chain under inclusion, and so do upper predicates.
# The comparators below order them by start (lower) and end (upper) position;
# negative means "starts earlier / ends earlier".  Rough and sharp values are
# assumed anchored to rationals, which normalization guarantees for stored
# bounds and every internal caller respects.


def _lower_cmp(v1, k1: Kind, v2, k2: Kind) -> int:
    if k1 is k2:
        return compare(v1, v2)
    if not infinitely_close(v1, v2):
        return compare(v1, v2)
    # same monad: a rough bound starts before anything else here, a sharp
    # bound after anything else; closed beats open only at the same value
    if k1 is Kind.ROUGH:
        return -1
    if k2 is Kind.ROUGH:
        return 1
    if k1 is Kind.SHARP:
        return 1
    if k2 is Kind.SHARP:
        return -1
    c = compare(v1, v2)
    if c != 0:
        return c
    return -1 if k1 is Kind.CLOSED else 1


def _upper_cmp(v1, k1: Kind, v2, k2: Kind) -> int:
    if k1 is k2:
        return compare(v1, v2)
    if not infinitely_close(v1, v2):
        return compare(v1, v2)
    if k1 is Kind.SHARP:
        return -1
    if k2 is Kind.SHARP:
        return 1
    if k1 is Kind.ROUGH:
        return 1
    if k2 is Kind.ROUGH:
        return -1
    c = compare(v1, v2)
    if c != 0:
        return c
    return -1 if k1 is Kind.OPEN else 1


@dataclass(frozen=True, slots=True)
class GenInterval:
    """One canonical generalized interval.

    Invariants: bound values are finite; rough bounds sit exactly on their
    rational anchor (rough predicates depend only on the monad of the bound
    value, so anchoring loses nothing); the predicate pair is satisfiable;
    kinds are closed, open, or rough.  Build through make().
    """

    lo: RationalFunction
    lo_kind: Kind
    hi: RationalFunction
    hi_kind: Kind

    @staticmethod
    def make(lo, lo_kind: Kind, hi, hi_kind: Kind) -> "GenInterval":
        lo = as_elem(lo)
        hi = as_elem(hi)
        if Kind.SHARP in (lo_kind, hi_kind):
            raise ValueError("sharp bounds are internal plumbing, not storable")
        if not (is_finite(lo) and is_finite(hi)):
            raise ValueError("interval bounds must be finite field elements")
        if lo_kind is Kind.ROUGH:
            lo = embed_rational(standard_part(lo))
        if hi_kind is Kind.ROUGH:
            hi = embed_rational(standard_part(hi))
        if not _nonempty(lo, lo_kind, hi, hi_kind):
            raise EmptyIntervalError(
                f"no point satisfies {lo_kind.value}:{lo!r} .. {hi!r}:{hi_kind.value}"
            )
        return GenInterval(lo, lo_kind, hi, hi_kind)

    def contains(self, x) -> bool:
        x = as_elem(x)
        return _lower_holds(self.lo, self.lo_kind, x) and _upper_holds(
            self.hi, self.hi_kind, x
        )


def _interval_cmp(a: GenInterval, b: GenInterval) -> int:
    c = _lower_cmp(a.lo, a.lo_kind, b.lo, b.lo_kind)
    if c != 0:
        return c
    return _upper_cmp(a.hi, a.hi_kind, b.hi, b.hi_kind)


# Complementing a bound predicate flips which side it faces: the complement
# of upper-closed(b) is lower-open(b), of upper-open(b) lower-closed(b), and
# of upper-rough(b) lower-sharp(b).  The kind map is the same for lower
# bounds complemented into upper ones.
_COMPLEMENT_KIND = {Kind.CLOSED: Kind.OPEN, Kind.OPEN: Kind.CLOSED, Kind.ROUGH: Kind.SHARP}


def _mergeable(a: GenInterval, b: GenInterval) -> bool:
    """True when a | b is one interval, given a starts at-or-before b.

    The gap between them is "beyond a's upper" meet "before b's lower"; the
    two pieces merge exactly when that gap is empty.
    """
    return not _nonempty(
        a.hi, _COMPLEMENT_KIND[a.hi_kind], b.lo, _COMPLEMENT_KIND[b.lo_kind]
    )


def _normalize_parts(parts) -> tuple[GenInterval, ...]:
    if not parts:
        return ()
    items = sorted(parts, key=cmp_to_key(_interval_cmp))
    out = [items[0]]
    for nxt in items[1:]:
        cur = out[-1]
        if _mergeable(cur, nxt):
            if _upper_cmp(cur.hi, cur.hi_kind, nxt.hi, nxt.hi_kind) < 0:
                out[-1] = GenInterval(cur.lo, cur.lo_kind, nxt.hi, nxt.hi_kind)
        else:
            out.append(nxt)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class NSet:
    """Finite union of generalized intervals in normal form.

    Normal form sorts the parts and merges until every gap between
    neighbours is nonempty.  The form is unique per set, so the dataclass
    equality and hash are semantic.  Build through of_intervals() or the
    constructors below; the empty set is allowed.
    """

    parts: tuple[GenInterval, ...]

    @staticmethod
    def of_intervals(parts) -> "NSet":
        return NSet(_normalize_parts(list(parts)))

    def contains(self, x) -> bool:
        x = as_elem(x)
        return any(p.contains(x) for p in self.parts)

    def is_empty(self) -> bool:
        return not self.parts

    def __or__(self, other: "NSet") -> "NSet":
        return NSet.of_intervals(self.parts + other.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        try:
            from .syntax import format_nset

            return format_nset(self)
        except ImportError:
            return f"NSet({self.parts!r})"

    __str__ = __repr__


EMPTY = NSet(())


def interval(lo, lo_kind: Kind, hi, hi_kind: Kind) -> NSet:
    return NSet((GenInterval.make(lo, lo_kind, hi, hi_kind),))


def singleton(value) -> NSet:
    v = as_elem(value)
    return interval(v, Kind.CLOSED, v, Kind.CLOSED)


def points(*values) -> NSet:
    return NSet.of_intervals(
        GenInterval.make(as_elem(v), Kind.CLOSED, as_elem(v), Kind.CLOSED)
        for v in values
    )


def unit_interval() -> NSet:
    """The unit range with rough ends: everything roughly between 0 and 1."""
    return interval(ZERO, Kind.ROUGH, ONE, Kind.ROUGH)


def padded_unit_interval(eps) -> NSet:
    """The open interval from -eps to 1+eps for a positive infinitesimal eps.

    A rival reading of "unit range with infinitesimal slack": unlike the
    rough-ended unit_interval() it misses points like -2*eps, so the two are
    provably different sets.
    """
    eps = _positive_infinitesimal(eps)
    return interval(ZERO - eps, Kind.OPEN, ONE + eps, Kind.OPEN)


def monad(value) -> NSet:
    """All points infinitely close to the given finite value."""
    a = embed_rational(standard_part(as_elem(value)))
    return interval(a, Kind.ROUGH, a, Kind.ROUGH)


def left_monad(value) -> NSet:
    """All points infinitely close to the value and strictly below it."""
    v = as_elem(value)
    a = embed_rational(standard_part(v))
    return interval(a, Kind.ROUGH, v, Kind.OPEN)


def right_monad(value) -> NSet:
    """All points infinitely close to the value and strictly above it."""
    v = as_elem(value)
    a = embed_rational(standard_part(v))
    return interval(v, Kind.OPEN, a, Kind.ROUGH)


def union(a: NSet, b: NSet) -> NSet:
    return a | b


def is_subset(a: NSet, b: NSet) -> bool:
    """Part-wise inclusion.

    Sound and complete on normal forms: the parts of b are separated by
    nonempty gaps and every part is order convex, so a part of a either sits
    inside a single part of b or it escapes b somewhere.
    """
    for p in a.parts:
        if not any(
            _lower_cmp(q.lo, q.lo_kind, p.lo, p.lo_kind) <= 0
            and _upper_cmp(p.hi, p.hi_kind, q.hi, q.hi_kind) <= 0
            for q in b.parts
        ):
            return False
    return True


def set_eq(a: NSet, b: NSet) -> bool:
    return a == b


def contains(s: NSet, x) -> bool:
    return s.contains(x)


def _meets_upper(s: NSet, v, kind: Kind) -> bool:
    """Does s meet the region of the upper predicate (v, kind)?"""
    for p in s.parts:
        if _upper_cmp(p.hi, p.hi_kind, v, kind) <= 0:
            return True  # the whole (nonempty) part satisfies the predicate
        if _nonempty(p.lo, p.lo_kind, v, kind):
            return True
    return False


def _meets_lower(s: NSet, v, kind: Kind) -> bool:
    """Does s meet the region of the lower predicate (v, kind)?"""
    for p in s.parts:
        if _lower_cmp(p.lo, p.lo_kind, v, kind) >= 0:
            return True
        if _nonempty(v, kind, p.hi, p.hi_kind):
            return True
    return False


def clamp_to_unit(s: NSet) -> NSet:
    """Clamp a set into the unit range.

    The portion inside unit_interval() survives unchanged.  Mass appreciably
    below 0 collapses to the left monad of 0, mass appreciably above 1 to
    the right monad of 1: overshoot keeps its roughness but loses its size.
    """
    out = []
    for p in s.parts:
        lo, lk = p.lo, p.lo_kind
        if _lower_cmp(lo, lk, ZERO, Kind.ROUGH) < 0:
            lo, lk = ZERO, Kind.ROUGH
        hi, hk = p.hi, p.hi_kind
        if _upper_cmp(hi, hk, ONE, Kind.ROUGH) > 0:
            hi, hk = ONE, Kind.ROUGH
        if _nonempty(lo, lk, hi, hk):
            out.append(GenInterval(lo, lk, hi, hk))
    if _meets_upper(s, ZERO, Kind.SHARP):
        out.extend(left_monad(ZERO).parts)
    if _meets_lower(s, ONE, Kind.SHARP):
        out.extend(right_monad(ONE).parts)
    return NSet.of_intervals(out)


def probe_points(s: NSet) -> list[RationalFunction]:
    """Deterministic membership probes around every bound of s.

    Mixes appreciable and infinitesimal offsets in both directions so it
    lands inside, outside, and on the fringes of each bound's monad.
    """
    half = embed_rational(Fraction(1, 2))
    small = ONE / X
    deltas = [
        ZERO,
        ONE,
        -ONE,
        half,
        -half,
        small,
        -small,
        2 * small,
        -2 * small,
        half + small,
        -(half + small),
    ]
    seen = set()
    for p in s.parts:
        for v in (p.lo, p.hi):
            for d in deltas:
                seen.add(v + d)
    return sorted(seen, key=cmp_to_key(compare))


@dataclass(frozen=True, slots=True)
class Witness:
    """A member of the set lying on the wrong side of a candidate bound."""

    point: RationalFunction


@dataclass(frozen=True, slots=True)
class BetterBound:
    """A strictly better bound, disproving optimality of the candidate."""

    bound: RationalFunction


def _monad_anchor(s: NSet) -> RationalFunction:
    if len(s.parts) == 1:
        p = s.parts[0]
        if p.lo_kind is Kind.ROUGH and p.hi_kind is Kind.ROUGH and p.lo == p.hi:
            return p.lo
    raise ValueError("refutation target must be a single monad")


def _positive_infinitesimal(eps) -> RationalFunction:
    eps = as_elem(eps)
    if sign(eps) != 1 or not is_infinitesimal(eps):
        raise ValueError("eps must be a positive infinitesimal")
    return eps


def refute_infimum(s: NSet, candidate, eps) -> Witness | BetterBound:
    """Certificate that the candidate is not the greatest lower bound of s.

    s must be a monad; monads have no infimum, so every candidate loses.
    Appreciably-low candidates are beaten by a strictly better bound, all
    others are undercut by a member of s below them.
    """
    a = _monad_anchor(s)
    cand = as_elem(candidate)
    eps = _positive_infinitesimal(eps)
    if infinitely_close(cand, a):
        return Witness(cand - 2 * eps)
    if compare(cand, a) < 0:
        return BetterBound((cand + a) / 2)
    return Witness(a)


def refute_supremum(s: NSet, candidate, eps) -> Witness | BetterBound:
    """Certificate that the candidate is not the least upper bound of s."""
    a = _monad_anchor(s)
    cand = as_elem(candidate)
    eps = _positive_infinitesimal(eps)
    if infinitely_close(cand, a):
        return Witness(cand + 2 * eps)
    if compare(cand, a) > 0:
        return BetterBound((cand + a) / 2)
    return Witness(a)


def verify_refutation(s: NSet, candidate, mode: str, cert) -> bool:
    """Re-check a refutation certificate using only membership and order."""
    cand = as_elem(candidate)
    if mode not in ("inf", "sup"):
        raise ValueError("mode must be 'inf' or 'sup'")
    if isinstance(cert, Witness):
        if not s.contains(cert.point):
            return False
        c = compare(cert.point, cand)
        return c < 0 if mode == "inf" else c > 0
    if isinstance(cert, BetterBound):
        b = cert.bound
        if mode == "inf":
            return compare(b, cand) > 0 and not _meets_upper(s, b, Kind.OPEN)
        return compare(b, cand) < 0 and not _meets_lower(s, b, Kind.OPEN)
    raise TypeError(f"unknown certificate type: {type(cert).__name__}")
