"""Field and order behaviour of the Q(X) layer."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from nsl.ordfield import (
    ONE,
    X,
    ZERO,
    Polynomial,
    RationalFunction,
    compare,
    embed_rational,
    infinitely_close,
    is_finite,
    is_infinitesimal,
    poly_gcd,
    roughly_le,
    sign,
    standard_part,
)

half = embed_rational(Fraction(1, 2))


def rf(num_coeffs, den_coeffs):
    return RationalFunction.make(
        Polynomial.make(num_coeffs), Polynomial.make(den_coeffs)
    )


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)
polys = st.lists(rationals, max_size=4).map(Polynomial.make)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
elements = st.builds(RationalFunction.make, polys, nonzero_polys)
# num degree <= 3 here, so dividing by X^4 always lands strictly below scale
infinitesimals = elements.map(lambda r: r / X**4)
finites = st.builds(lambda q, i: embed_rational(q) + i, rationals, infinitesimals)


def test_subtraction_example():
    got = ONE - ONE / X
    assert got == rf([-1, 1], [0, 1])
    assert standard_part(got) == 1
    assert not is_infinitesimal(got)


def test_infinitesimals_are_ordered_by_scale():
    assert compare(ONE / X, ONE / X**2) == 1
    assert compare(ONE / X**2, ZERO) == 1


def test_standard_part_extracts_the_rational_shadow():
    assert standard_part((2 * X + 1) / X) == 2
    assert standard_part(ONE / X) == 0
    assert standard_part(embed_rational(Fraction(7, 3))) == Fraction(7, 3)
    assert standard_part(half - ONE / X) == Fraction(1, 2)


def test_standard_part_rejects_infinite_elements():
    with pytest.raises(ValueError):
        standard_part(X)
    with pytest.raises(ValueError):
        standard_part((X * X + 1) / X)


def test_infinitesimal_classification():
    assert is_infinitesimal(ONE / X)
    assert is_infinitesimal(ONE / X**2)
    assert is_infinitesimal(ZERO)
    assert not is_infinitesimal(X)
    assert not is_infinitesimal(ONE - ONE / X)


def test_finiteness_classification():
    assert is_finite(ZERO)
    assert is_finite(ONE - ONE / X)
    assert is_finite((2 * X + 1) / X)
    assert not is_finite(X)
    assert not is_finite(-X)


def test_x_dominates_every_rational():
    assert X > 10**12
    assert ONE / X < Fraction(1, 10**12)
    assert ONE / X > 0


def test_sign_is_the_eventual_sign():
    assert sign(X) == 1
    assert sign(-X + 10**9) == -1
    assert sign(ZERO) == 0
    assert sign(ONE / X) == 1


def test_closeness_examples():
    assert infinitely_close(ONE, ONE - ONE / X)
    assert not infinitely_close(ONE, half)
    assert roughly_le(ONE + ONE / X, ONE)
    assert not roughly_le(ONE + half, ONE)
    assert roughly_le(ZERO, ONE)


def test_powers():
    assert X**0 == ONE
    assert X**-1 == ONE / X
    assert (ONE / X) ** 3 == ONE / (X * X * X)


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        RationalFunction.make(Polynomial.make([1]), Polynomial.make([]))


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        embed_rational(0.5)
    with pytest.raises(TypeError):
        Polynomial.make([0.25])


def test_poly_gcd_is_monic():
    a = Polynomial.make([-1, 0, 1])  # X^2 - 1
    b = Polynomial.make([2, 2])  # 2X + 2
    assert poly_gcd(a, b) == Polynomial.make([1, 1])


@given(elements, elements, elements)
def test_add_is_associative(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(elements, elements)
def test_add_is_commutative(a, b):
    assert a + b == b + a


@given(elements)
def test_additive_inverse(a):
    assert a + (-a) == ZERO


@given(elements, elements, elements)
def test_mul_distributes_over_add(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(elements, elements)
def test_mul_is_commutative(a, b):
    assert a * b == b * a


@given(elements)
def test_multiplicative_identity(a):
    assert ONE * a == a


@given(elements, elements)
def test_division_inverts_multiplication(a, b):
    assume(b != ZERO)
    assert (a / b) * b == a


@given(polys, nonzero_polys, nonzero_polys)
def test_common_factors_cancel(n, d, k):
    assert RationalFunction.make(n * k, d * k) == RationalFunction.make(n, d)


@given(elements, elements)
def test_compare_is_antisymmetric_and_matches_eq(a, b):
    c = compare(a, b)
    assert c in (-1, 0, 1)
    assert (c == 0) == (a == b)
    assert c == -compare(b, a)


@given(elements, elements)
def test_compare_matches_sign_of_difference(a, b):
    assert compare(a, b) == sign(a - b)


@given(elements, elements, elements)
def test_order_is_translation_invariant(a, b, c):
    assert compare(a, b) == compare(a + c, b + c)


@given(elements, elements, elements)
def test_order_respects_positive_scaling(a, b, c):
    assume(sign(c) == 1)
    assert compare(a, b) == compare(a * c, b * c)


@given(finites)
def test_standard_part_is_infinitely_close(a):
    assert infinitely_close(a, embed_rational(standard_part(a)))


@given(infinitesimals, infinitesimals)
def test_infinitesimals_are_closed_under_add(i, j):
    assert is_infinitesimal(i + j)


@given(infinitesimals, finites)
def test_infinitesimal_times_finite_is_infinitesimal(i, f):
    assert is_infinitesimal(i * f)


@given(finites, finites)
def test_finites_are_closed_under_arithmetic(a, b):
    assert is_finite(a + b)
    assert is_finite(a * b)


@given(elements, infinitesimals)
def test_roughly_le_ignores_infinitesimal_noise(a, i):
    assert roughly_le(a + i, a)
    assert roughly_le(a, a + i)
