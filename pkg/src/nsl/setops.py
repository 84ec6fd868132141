"""Exact images of interval unions under maps affine in each argument.

Every connective on truth-value sets is the image of a map of the shape
k0 + ka*a + kb*b + kab*a*b with rational coefficients.  This module
computes such images over NSets.  Operands are first decomposed into
three primitive atoms: isolated points, ordinary segments, and fringes
(half-monads with an optional cut).  Each atom pair maps to a short list
of generalized intervals plus an exactness verdict: either the list is
the precise image of the pair, or it is a sound hull.  A hull can arise
only where an output bound is reached through a vanishing or
infinitesimal coefficient, because the available infinitesimals max out
at the 1/X scale and second-order products cannot fill a monad fringe.
Hull pieces that land inside the union of exact pieces are absorbed, so
the final exactness flag is per result, not per atom pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .nsets import (
    EMPTY,
    GenInterval,
    Kind,
    NSet,
    as_elem,
    is_subset,
    right_monad,
    set_eq,
)
from .ordfield import (
    ONE,
    ZERO,
    RationalFunction,
    compare,
    embed_rational,
    infinitely_close,
    is_infinitesimal,
    sign,
    standard_part,
)

__all__ = [
    "Point",
    "Seg",
    "Fringe",
    "decompose",
    "PairMap",
    "PRODUCT",
    "PROB_SUM",
    "IMPLICATION_CORE",
    "ADD",
    "SUB",
    "ImageResult",
    "image_pair",
    "image_multilinear",
    "owedge",
    "ovee",
    "obslash",
    "obslash_image",
    "elem_add",
    "elem_sub",
    "elem_mul",
    "ovee_prime",
    "obslash_prime",
]


def _is_standard(v: RationalFunction) -> bool:
    return v.den.degree == 0 and v.num.degree <= 0


@dataclass(frozen=True, slots=True)
class Point:
    """A single element."""

    value: RationalFunction


@dataclass(frozen=True, slots=True)
class Seg:
    """An ordinary interval with strictly separated endpoints.

    The endpoints may be infinitely close; only equality is excluded.
    """

    lo: RationalFunction
    lo_closed: bool
    hi: RationalFunction
    hi_closed: bool

    def __post_init__(self):
        if compare(self.lo, self.hi) >= 0:
            raise ValueError("segment endpoints must be strictly increasing")

    def mid(self) -> RationalFunction:
        return (self.lo + self.hi) / 2

    def member(self, x: RationalFunction) -> bool:
        c = compare(x, self.lo)
        if c < 0 or (c == 0 and not self.lo_closed):
            return False
        c = compare(x, self.hi)
        return c < 0 or (c == 0 and self.hi_closed)


@dataclass(frozen=True, slots=True)
class Fringe:
    """One half of a monad, optionally cut back from its anchor.

    The set {anchor + d : d infinitesimal, sign(d) == side, |d| >= |cut|},
    with equality at the cut allowed only when cut_closed.  A zero cut
    means the full half-monad, so the anchor itself never belongs.  The
    far side has no edge: it fades out at the end of the monad.
    """

    anchor: RationalFunction
    side: int
    cut: RationalFunction
    cut_closed: bool

    def __post_init__(self):
        if not _is_standard(self.anchor):
            raise ValueError("fringe anchor must be a standard element")
        if self.side not in (-1, 1):
            raise ValueError("fringe side must be +1 or -1")
        if not is_infinitesimal(self.cut):
            raise ValueError("fringe cut must be infinitesimal")
        s = sign(self.cut)
        if s == 0:
            if self.cut_closed:
                raise ValueError("an uncut fringe cannot be cut-closed")
        elif s != self.side:
            raise ValueError("fringe cut must point to the fringe side")

    def member(self, x: RationalFunction) -> bool:
        delta = x - self.anchor
        if sign(delta) != self.side or not is_infinitesimal(delta):
            return False
        # positive when delta lies beyond the cut, whichever side that is
        c = compare(delta, self.cut) * self.side
        return c > 0 or (c == 0 and self.cut_closed)


def decompose(iv: GenInterval) -> list:
    """Split a generalized interval into points, segments, and fringes.

    Rough bounds sit on rational anchors, so a rough end always splits
    into a full half-monad fringe plus whatever the other bound leaves;
    an exact bound inside the anchor's monad trims the fringe instead.
    """
    lo, lk, hi, hk = iv.lo, iv.lo_kind, iv.hi, iv.hi_kind
    if lk is Kind.ROUGH and hk is Kind.ROUGH:
        out = [Fringe(lo, -1, ZERO, False)]
        if lo == hi:
            out.append(Point(lo))
        else:
            out.append(Seg(lo, True, hi, True))
        out.append(Fringe(hi, +1, ZERO, False))
        return out
    if lk is Kind.ROUGH:
        c = compare(hi, lo)
        if c > 0:
            return [Fringe(lo, -1, ZERO, False), Seg(lo, True, hi, hk is Kind.CLOSED)]
        if c == 0:
            out = [Fringe(lo, -1, ZERO, False)]
            if hk is Kind.CLOSED:
                out.append(Point(lo))
            return out
        return [Fringe(lo, -1, hi - lo, hk is Kind.CLOSED)]
    if hk is Kind.ROUGH:
        c = compare(lo, hi)
        if c < 0:
            return [Seg(lo, lk is Kind.CLOSED, hi, True), Fringe(hi, +1, ZERO, False)]
        if c == 0:
            out = [Point(hi)] if lk is Kind.CLOSED else []
            out.append(Fringe(hi, +1, ZERO, False))
            return out
        return [Fringe(hi, +1, lo - hi, lk is Kind.CLOSED)]
    if lo == hi:
        return [Point(lo)]
    return [Seg(lo, lk is Kind.CLOSED, hi, hk is Kind.CLOSED)]


@dataclass(frozen=True, slots=True)
class PairMap:
    """A map affine in each of its two arguments: k0 + ka*a + kb*b + kab*a*b."""

    name: str
    k0: Fraction
    ka: Fraction
    kb: Fraction
    kab: Fraction

    def __call__(self, a, b) -> RationalFunction:
        a = as_elem(a)
        b = as_elem(b)
        return self.k0 + self.ka * a + self.kb * b + self.kab * (a * b)

    def swap(self) -> "PairMap":
        return PairMap(self.name, self.k0, self.kb, self.ka, self.kab)


def _pm(name, k0, ka, kb, kab) -> PairMap:
    return PairMap(name, Fraction(k0), Fraction(ka), Fraction(kb), Fraction(kab))


PRODUCT = _pm("product", 0, 0, 0, 1)
PROB_SUM = _pm("prob_sum", 0, 1, 1, -1)
# core of the arrow connective; the padding by the right monad of 1 is a
# separate elementwise-sum pass, see obslash_image
IMPLICATION_CORE = _pm("implication_core", 1, -1, 0, 1)
ADD = _pm("add", 0, 1, 1, 0)
SUB = _pm("sub", 0, 1, -1, 0)


def _ck(closed: bool) -> Kind:
    return Kind.CLOSED if closed else Kind.OPEN


def _point_iv(v: RationalFunction) -> GenInterval:
    return GenInterval.make(v, Kind.CLOSED, v, Kind.CLOSED)


def _fringe_iv(base: RationalFunction, d: int, closed: bool) -> GenInterval:
    """The set {base + x : x d-signed infinitesimal}, plus base when closed.

    make() anchors the rough end to the standard part of base, which is
    what bounds the far side of the fringe.
    """
    if d > 0:
        return GenInterval.make(base, _ck(closed), base, Kind.ROUGH)
    return GenInterval.make(base, Kind.ROUGH, base, _ck(closed))


def _affine_seg(intercept, slope, s: Seg):
    """Image of a segment under an affine map; always exact."""
    if slope == ZERO:
        return [_point_iv(intercept)], True
    a = intercept + slope * s.lo
    b = intercept + slope * s.hi
    if sign(slope) > 0:
        return [GenInterval.make(a, _ck(s.lo_closed), b, _ck(s.hi_closed))], True
    return [GenInterval.make(b, _ck(s.hi_closed), a, _ck(s.lo_closed))], True


def _point_fringe(pm: PairMap, p: RationalFunction, f: Fringe):
    k = pm.kb + pm.kab * p
    base = pm(p, f.anchor + f.cut)
    if k == ZERO:
        return [_point_iv(base)], True
    d = f.side * sign(k)
    # an appreciable coefficient scales the half-monad onto itself; an
    # infinitesimal one squashes it an order down, leaving only a hull
    return [_fringe_iv(base, d, f.cut_closed)], not is_infinitesimal(k)


def _seg_seg(pm: PairMap, s1: Seg, s2: Seg):
    corners = [pm(x, y) for x in (s1.lo, s1.hi) for y in (s2.lo, s2.hi)]
    mn = mx = corners[0]
    for v in corners[1:]:
        if compare(v, mn) < 0:
            mn = v
        if compare(v, mx) > 0:
            mx = v
    if mn == mx:
        # equal corners force the map constant on the whole box
        return [_point_iv(mn)], True

    def attained(target: RationalFunction) -> bool:
        # fix one coordinate at a closed endpoint or the midpoint, then
        # solve the remaining affine map for the other; this finds every
        # attained extremum because a nonconstant affine slice peaks at a
        # closed endpoint and a constant one is matched through the middle
        for x0, ok in ((s1.lo, s1.lo_closed), (s1.hi, s1.hi_closed), (s1.mid(), True)):
            if not ok:
                continue
            slope = pm.kb + pm.kab * x0
            if slope == ZERO:
                if pm(x0, s2.mid()) == target:
                    return True
            else:
                y = (target - (pm.k0 + pm.ka * x0)) / slope
                if s2.member(y):
                    return True
        for y0, ok in ((s2.lo, s2.lo_closed), (s2.hi, s2.hi_closed), (s2.mid(), True)):
            if not ok:
                continue
            slope = pm.ka + pm.kab * y0
            if slope == ZERO:
                if pm(s1.mid(), y0) == target:
                    return True
            else:
                x = (target - (pm.k0 + pm.kb * y0)) / slope
                if s1.member(x):
                    return True
        return False

    return [GenInterval.make(mn, _ck(attained(mn)), mx, _ck(attained(mx)))], True


def _fringe_seg_piece(pm: PairMap, f: Fringe, edge: RationalFunction, p: Seg):
    """Image of fringe x segment where the fringe coefficient keeps one sign.

    Writing the fringe variable as edge + d' (d' running over a full
    half-monad, closed at zero iff the cut is closed), the value splits
    into psi(y) = map(edge, y) plus d' * k(y).  The psi sweep gives a dry
    bound on the side the fringes point away from; the fringes smear the
    other side across the monad of psi's extremum.
    """
    mid = p.mid()
    d = f.side * sign(pm.ka + pm.kab * mid)
    sigma = pm.kb + pm.kab * edge
    psi_lo = pm(edge, p.lo)
    psi_hi = pm(edge, p.hi)
    sgn = sign(sigma)
    if sgn == 0:
        dry, dry_end_closed = psi_lo, True
        fuzz, fuzz_end = psi_lo, None
        cands = [p.lo, p.hi]
    else:
        if (sgn > 0) == (d > 0):
            dry, dry_end_closed = psi_lo, p.lo_closed
            fuzz, fuzz_end = psi_hi, p.hi
        else:
            dry, dry_end_closed = psi_hi, p.hi_closed
            fuzz, fuzz_end = psi_lo, p.lo
        cands = [
            w
            for w, pw in ((p.lo, psi_lo), (p.hi, psi_hi))
            if infinitely_close(pw, fuzz)
        ]
    dry_kind = _ck(f.cut_closed and (sgn == 0 or dry_end_closed))
    if any(not is_infinitesimal(pm.ka + pm.kab * w) for w in cands):
        # some fringe near the extremum has appreciable gain, so it smears
        # the whole monad of the extremum
        fuzz_kind, ok = Kind.ROUGH, True
    elif (
        fuzz_end is not None
        and pm.ka + pm.kab * fuzz_end == ZERO
        and not is_infinitesimal(sigma)
    ):
        # the fringes pinch out exactly at the extremum while psi falls
        # away appreciably: the extremum is approached but never crossed
        fuzz_kind, ok = Kind.OPEN, True
    else:
        fuzz_kind, ok = Kind.ROUGH, False
    if d > 0:
        return [GenInterval.make(dry, dry_kind, fuzz, fuzz_kind)], ok
    return [GenInterval.make(fuzz, fuzz_kind, dry, dry_kind)], ok


def _fringe_seg(pm: PairMap, f: Fringe, s: Seg):
    if pm.ka == 0 and pm.kab == 0:
        # the fringe argument is dead weight
        return _affine_seg(embed_rational(pm.k0), embed_rational(pm.kb), s)
    edge = f.anchor + f.cut
    out: list[GenInterval] = []
    exact = True
    pieces: list[Seg] = []
    if pm.kab == 0:
        pieces.append(s)
    else:
        y0 = embed_rational(Fraction(-pm.ka, pm.kab))
        c_lo = compare(y0, s.lo)
        c_hi = compare(y0, s.hi)
        if c_lo < 0 or c_hi > 0:
            pieces.append(s)
        else:
            # the fringe coefficient vanishes at y0: that slice maps to a
            # single point, and the rest splits into sign-constant pieces
            if s.member(y0):
                out.append(_point_iv(pm(edge, y0)))
            if c_lo > 0:
                pieces.append(Seg(s.lo, s.lo_closed, y0, False))
            if c_hi < 0:
                pieces.append(Seg(y0, False, s.hi, s.hi_closed))
    for piece in pieces:
        ivs, ok = _fringe_seg_piece(pm, f, edge, piece)
        out.extend(ivs)
        exact = exact and ok
    return out, exact


def _fringe_fringe(pm: PairMap, f1: Fringe, f2: Fringe):
    k1 = pm.ka + pm.kab * f2.anchor
    k2 = pm.kb + pm.kab * f1.anchor
    base = pm(f1.anchor + f1.cut, f2.anchor + f2.cut)
    z1 = k1 == ZERO
    z2 = k2 == ZERO
    if z1 and z2:
        if pm.kab == 0:
            return [_point_iv(base)], True
        # only the cross term moves; its reach tops out at second order
        # while the hull fringe contains first-order points, so no finite
        # interval union matches the true image here
        d = f1.side * f2.side * (1 if pm.kab > 0 else -1)
        core = pm(f1.anchor, f2.anchor)
        cut = pm.kab * (f1.cut * f2.cut)
        return [_fringe_iv(core + cut, d, f1.cut_closed and f2.cut_closed)], False
    if not z1 and not z2:
        d1 = f1.side * sign(k1)
        d2 = f2.side * sign(k2)
        if d1 != d2:
            # opposing appreciable pushes sweep the whole monad
            return [GenInterval.make(base, Kind.ROUGH, base, Kind.ROUGH)], True
        return [_fringe_iv(base, d1, f1.cut_closed and f2.cut_closed)], True
    if z1:
        main, other, main_k = f2, f1, k2
    else:
        main, other, main_k = f1, f2, k1
    d = main.side * sign(main_k)
    dead_coef = pm.kab * main.cut
    if dead_coef == ZERO:
        # the k-dead fringe truly cannot move the value
        return [_fringe_iv(base, d, main.cut_closed)], True
    if other.side * sign(dead_coef) == d:
        return [_fringe_iv(base, d, f1.cut_closed and f2.cut_closed)], True
    # the dead fringe pushes back against the cut by a second-order amount:
    # values stay strictly d-beyond the uncut frontier but dip inside the
    # cut, which no finite interval union captures exactly
    return [_fringe_iv(pm(f1.anchor, f2.anchor), d, False)], False


def _atom_image(pm: PairMap, x, y):
    if isinstance(x, Point):
        if isinstance(y, Point):
            return [_point_iv(pm(x.value, y.value))], True
        if isinstance(y, Seg):
            return _affine_seg(
                pm.k0 + pm.ka * x.value, pm.kb + pm.kab * x.value, y
            )
        return _point_fringe(pm, x.value, y)
    if isinstance(x, Seg):
        if isinstance(y, Seg):
            return _seg_seg(pm, x, y)
        return _atom_image(pm.swap(), y, x)
    if isinstance(y, Seg):
        return _fringe_seg(pm, x, y)
    if isinstance(y, Fringe):
        return _fringe_fringe(pm, x, y)
    return _atom_image(pm.swap(), y, x)


@dataclass(frozen=True, slots=True)
class ImageResult:
    """An image set together with an exactness verdict.

    exact=True means the set is the image, element for element.  False
    means the set is a sound hull: it contains the image, and at least
    one hull piece escaped the exactly-computed part of the union.
    """

    nset: NSet
    exact: bool


def image_pair(pm: PairMap, a: NSet, b: NSet) -> ImageResult:
    if a.is_empty() or b.is_empty():
        return ImageResult(EMPTY, True)
    atoms_a = [at for part in a.parts for at in decompose(part)]
    atoms_b = [at for part in b.parts for at in decompose(part)]
    exact_ivs: list[GenInterval] = []
    hull_ivs: list[GenInterval] = []
    for xa in atoms_a:
        for xb in atoms_b:
            ivs, ok = _atom_image(pm, xa, xb)
            (exact_ivs if ok else hull_ivs).extend(ivs)
    exact_set = NSet.of_intervals(exact_ivs)
    if not hull_ivs:
        return ImageResult(exact_set, True)
    total = NSet.of_intervals(exact_ivs + hull_ivs)
    # a hull piece swallowed by exact pieces costs nothing
    absorbed = all(is_subset(NSet((h,)), exact_set) for h in hull_ivs)
    return ImageResult(total, absorbed)


def _pad_above(iv: GenInterval) -> GenInterval:
    """Add the strictly positive half-monad to an interval, elementwise.

    Sums exceed the old lower bound strictly (unless it was rough, which
    already reaches across its whole monad) and smear the upper bound
    across its monad.
    """
    lk = iv.lo_kind if iv.lo_kind is Kind.ROUGH else Kind.OPEN
    return GenInterval.make(iv.lo, lk, iv.hi, Kind.ROUGH)


def obslash_image(a: NSet, b: NSet) -> ImageResult:
    core = image_pair(IMPLICATION_CORE, a, b)
    padded = NSet.of_intervals(_pad_above(p) for p in core.nset.parts)
    return ImageResult(padded, core.exact)


_BINARY_MAPS = {"product": PRODUCT, "prob_sum": PROB_SUM}


def image_multilinear(map_name: str, *operands: NSet) -> ImageResult:
    """Image of operand sets under a named connective map.

    The binary maps are "product" and "prob_sum".  The ternary
    "implication" map c - a + a*b is supported in the form the logic
    uses: its first operand must equal right_monad(1).
    """
    if map_name in _BINARY_MAPS:
        if len(operands) != 2:
            raise ValueError(f"map {map_name!r} takes exactly two operands")
        return image_pair(_BINARY_MAPS[map_name], operands[0], operands[1])
    if map_name == "implication":
        if len(operands) != 3:
            raise ValueError("map 'implication' takes exactly three operands")
        head, a, b = operands
        if not set_eq(head, right_monad(ONE)):
            raise ValueError(
                "the implication map is only supported with first operand "
                "right_monad(1)"
            )
        return obslash_image(a, b)
    raise ValueError(f"unknown map name: {map_name!r}")


def owedge(a: NSet, b: NSet) -> NSet:
    """Conjunction on truth sets: the joint image of a*b."""
    return image_pair(PRODUCT, a, b).nset


def ovee(a: NSet, b: NSet) -> NSet:
    """Disjunction on truth sets: the joint image of a + b - a*b."""
    return image_pair(PROB_SUM, a, b).nset


def obslash(a: NSet, b: NSet) -> NSet:
    """Arrow on truth sets: the image of c - a + a*b over c in 1-plus."""
    return obslash_image(a, b).nset


def elem_add(a: NSet, b: NSet) -> NSet:
    return image_pair(ADD, a, b).nset


def elem_sub(a: NSet, b: NSet) -> NSet:
    return image_pair(SUB, a, b).nset


def elem_mul(a: NSet, b: NSet) -> NSet:
    return image_pair(PRODUCT, a, b).nset


def ovee_prime(a: NSet, b: NSet) -> NSet:
    """The uncorrected disjunction: composed from elementwise pieces.

    (a + b) - a*b with the three images taken independently, so the same
    element of a may be picked differently in each piece.  This is what
    lets the result escape the unit range.
    """
    return elem_sub(elem_add(a, b), elem_mul(a, b))


def obslash_prime(a: NSet, b: NSet) -> NSet:
    """The uncorrected arrow: (1-plus - a) + a*b, pieces independent."""
    return elem_add(elem_sub(right_monad(ONE), a), elem_mul(a, b))
