"""Generalized intervals: membership, normal form, subset, clamp, refutation."""

from fractions import Fraction

import pytest
from hypothesis import given

from nsl.nsets import (
    EMPTY,
    BetterBound,
    EmptyIntervalError,
    GenInterval,
    Kind,
    NSet,
    Witness,
    clamp_to_unit,
    contains,
    interval,
    is_subset,
    left_monad,
    monad,
    padded_unit_interval,
    points,
    probe_points,
    refute_infimum,
    refute_supremum,
    right_monad,
    set_eq,
    singleton,
    union,
    unit_interval,
    verify_refutation,
)
from nsl.ordfield import ONE, X, ZERO, compare, embed_rational

from strategies import nsets

eps = ONE / X
half = embed_rational(Fraction(1, 2))


def test_bound_kind_membership():
    closed = interval(0, Kind.CLOSED, 1, Kind.CLOSED)
    assert closed.contains(0) and closed.contains(1)
    assert not closed.contains(-eps) and not closed.contains(1 + eps)

    opened = interval(0, Kind.OPEN, 1, Kind.OPEN)
    assert not opened.contains(0) and not opened.contains(1)
    assert opened.contains(eps) and opened.contains(1 - eps)

    rough = unit_interval()
    assert rough.contains(0) and rough.contains(1)
    assert rough.contains(-eps) and rough.contains(1 + eps)
    assert not rough.contains(-half) and not rough.contains(1 + half)


def test_monad_membership():
    m = monad(half)
    assert m.contains(half)
    assert m.contains(half - eps) and m.contains(half + 2 * eps)
    assert not m.contains(Fraction(1, 4)) and not m.contains(half + half)

    lm = left_monad(ZERO)
    assert lm.contains(-eps) and not lm.contains(ZERO) and not lm.contains(eps)

    rm = right_monad(ONE)
    assert rm.contains(1 + eps) and not rm.contains(ONE) and not rm.contains(1 - eps)


def test_rough_bounds_anchor_to_their_monad():
    a = interval(half + eps, Kind.ROUGH, 1, Kind.CLOSED)
    b = interval(half, Kind.ROUGH, 1, Kind.CLOSED)
    assert a == b
    assert a.parts[0].lo == half


def test_cut_fringe_interval():
    # members are infinitely close to 1/2 but at most 1/2 - 1/X
    cut = interval(half, Kind.ROUGH, half - eps, Kind.CLOSED)
    assert cut.contains(half - eps)
    assert cut.contains(half - 2 * eps)
    assert not cut.contains(half)
    assert not cut.contains(half - eps / X)  # that sits above the cut
    assert is_subset(cut, monad(half))
    assert not is_subset(monad(half), cut)


def test_empty_intervals_are_rejected():
    with pytest.raises(EmptyIntervalError):
        interval(1, Kind.OPEN, 1, Kind.OPEN)
    with pytest.raises(EmptyIntervalError):
        interval(1, Kind.CLOSED, 0, Kind.CLOSED)
    with pytest.raises(EmptyIntervalError):
        interval(1, Kind.CLOSED, 1, Kind.OPEN)
    # inverted but infinitely close bounds need a rough side
    with pytest.raises(EmptyIntervalError):
        interval(half, Kind.CLOSED, half - eps, Kind.CLOSED)


def test_infinite_bounds_are_rejected():
    with pytest.raises(ValueError):
        interval(0, Kind.CLOSED, X, Kind.CLOSED)
    with pytest.raises(ValueError):
        singleton(X)


def test_sharp_is_not_storable():
    with pytest.raises(ValueError):
        interval(0, Kind.SHARP, 1, Kind.CLOSED)


def test_merge_examples():
    assert singleton(1) | right_monad(1) == interval(1, Kind.CLOSED, 1, Kind.ROUGH)
    assert interval(0, Kind.CLOSED, 1, Kind.OPEN) | singleton(1) == interval(
        0, Kind.CLOSED, 1, Kind.CLOSED
    )
    # touching open bounds leave the shared point out: two parts stay
    two = interval(0, Kind.CLOSED, 1, Kind.OPEN) | interval(1, Kind.OPEN, 2, Kind.CLOSED)
    assert len(two.parts) == 2
    # a singleton inside a monad dissolves
    assert monad(0) | singleton(eps) == monad(0)
    # fringe points just past an interval's rough end dissolve too
    assert unit_interval() | singleton(1 + eps) == unit_interval()


def test_points_builds_separated_singletons():
    s = points(0, 1)
    assert len(s.parts) == 2
    assert s.contains(0) and s.contains(1) and not s.contains(half)


def test_monad_is_not_an_open_interval():
    m = monad(half)
    o = interval(half - eps, Kind.OPEN, half + eps, Kind.OPEN)
    assert is_subset(o, m)
    assert not is_subset(m, o)  # m holds 1/2 - 2/X, below the open gate
    assert not set_eq(m, o)
    assert m.contains(half - 2 * eps) and not o.contains(half - 2 * eps)


def test_padded_unit_interval_differs_from_rough_unit():
    padded = padded_unit_interval(eps)
    rough = unit_interval()
    assert is_subset(padded, rough)
    assert not is_subset(rough, padded)
    assert not set_eq(padded, rough)
    assert rough.contains(-2 * eps) and not padded.contains(-2 * eps)


def test_padded_unit_interval_validates_eps():
    with pytest.raises(ValueError):
        padded_unit_interval(half)
    with pytest.raises(ValueError):
        padded_unit_interval(-eps)
    with pytest.raises(ValueError):
        padded_unit_interval(0)


def test_clamp_examples():
    assert clamp_to_unit(points(0, 1, 2)) == singleton(0) | interval(
        1, Kind.CLOSED, 1, Kind.ROUGH
    )
    assert clamp_to_unit(singleton(-1)) == left_monad(0)
    assert clamp_to_unit(interval(-1, Kind.CLOSED, 2, Kind.CLOSED)) == unit_interval()
    inside = interval(Fraction(1, 4), Kind.OPEN, half, Kind.CLOSED)
    assert clamp_to_unit(inside) == inside
    assert clamp_to_unit(EMPTY) == EMPTY


def test_probe_points_bracket_every_bound():
    ps = probe_points(unit_interval())
    assert all(isinstance(p, type(ZERO)) for p in ps)
    assert ps == sorted(ps, key=lambda v: 0)  # already sorted: spot check order
    for i in range(len(ps) - 1):
        assert compare(ps[i], ps[i + 1]) < 0
    assert any(p == ZERO for p in ps)
    assert any(p == ONE for p in ps)
    assert any(p == -eps for p in ps)
    assert probe_points(EMPTY) == []


def test_refutation_frozen_certificates():
    m = monad(half)
    assert refute_infimum(m, half, eps) == Witness(half - 2 * eps)
    assert refute_infimum(m, half - eps, eps) == Witness(half - 3 * eps)
    assert refute_infimum(m, 0, eps) == BetterBound(embed_rational(Fraction(1, 4)))
    assert refute_supremum(m, 1, eps) == BetterBound(embed_rational(Fraction(3, 4)))
    assert refute_supremum(monad(0), eps, eps) == Witness(3 * eps)


def test_refutations_verify():
    m = monad(half)
    for cand in [half, half - eps, half + eps, 0, Fraction(1, 4), Fraction(3, 4), 1]:
        cert = refute_infimum(m, cand, eps)
        assert verify_refutation(m, cand, "inf", cert)
        cert = refute_supremum(m, cand, eps)
        assert verify_refutation(m, cand, "sup", cert)


def test_refutation_validates_inputs():
    with pytest.raises(ValueError):
        refute_infimum(unit_interval(), 0, eps)  # not a monad
    with pytest.raises(ValueError):
        refute_infimum(monad(0), 0, half)  # eps not infinitesimal
    with pytest.raises(ValueError):
        refute_infimum(monad(0), 0, -eps)  # eps not positive
    with pytest.raises(ValueError):
        verify_refutation(monad(0), 0, "min", Witness(ZERO))


def test_verify_rejects_bogus_certificates():
    m = monad(half)
    assert not verify_refutation(m, half, "inf", Witness(half + eps))  # wrong side
    assert not verify_refutation(m, half, "inf", Witness(ZERO))  # not a member
    assert not verify_refutation(m, 0, "inf", BetterBound(embed_rational(-1)))
    assert not verify_refutation(m, 0, "inf", BetterBound(embed_rational(1)))


@given(nsets())
def test_normalization_is_idempotent(s):
    assert NSet.of_intervals(s.parts) == s


@given(nsets(), nsets())
def test_union_matches_pointwise_membership(a, b):
    u = a | b
    for x in probe_points(u) + probe_points(a) + probe_points(b):
        assert u.contains(x) == (a.contains(x) or b.contains(x))


@given(nsets(), nsets())
def test_union_is_commutative(a, b):
    assert a | b == b | a


@given(nsets(), nsets(), nsets())
def test_union_is_associative(a, b, c):
    assert (a | b) | c == a | (b | c)


@given(nsets(), nsets())
def test_subset_of_union(a, b):
    assert is_subset(a, a | b)
    assert is_subset(b, a | b)


@given(nsets(), nsets())
def test_subset_implies_pointwise(a, b):
    if is_subset(a, b):
        for x in probe_points(a) + probe_points(b):
            assert not a.contains(x) or b.contains(x)


@given(nsets(), nsets())
def test_mutual_subset_is_equality(a, b):
    both = is_subset(a, b) and is_subset(b, a)
    assert both == set_eq(a, b)


@given(nsets())
def test_clamp_lands_in_unit(s):
    c = clamp_to_unit(s)
    assert is_subset(c, unit_interval())
    assert clamp_to_unit(c) == c
    if is_subset(s, unit_interval()):
        assert c == s
