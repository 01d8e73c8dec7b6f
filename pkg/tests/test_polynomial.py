import math
import random

import pytest

from lcmlab.polynomial import Poly, identity_lhs_value, linear_product, verify_identity
from oracles import expand_linear_factors, poly_eval_reference


def rand_poly(rng, max_degree=5, lo=-9, hi=9):
    degree = rng.randint(0, max_degree)
    return Poly([rng.randint(lo, hi) for _ in range(degree + 1)])


def test_trailing_zeros_stripped():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0, 0]).coeffs == ()
    assert Poly([]).coeffs == ()


def test_zero_polynomial_degree_is_none():
    zero = Poly.zero()
    assert zero.is_zero
    assert zero.degree() is None
    assert zero.leading_coefficient() == 0


def test_degree_and_leading_coefficient():
    p = Poly([3, 0, 5])
    assert p.degree() == 2
    assert p.leading_coefficient() == 5
    assert not p.is_zero


def test_has_nonneg_coeffs():
    assert Poly([0, 1]).has_nonneg_coeffs()
    assert Poly([2, 0, 7]).has_nonneg_coeffs()
    assert not Poly([-1, 1]).has_nonneg_coeffs()
    assert Poly.zero().has_nonneg_coeffs()


def test_constructors():
    assert Poly.x() == Poly([0, 1])
    assert Poly.constant(4) == Poly([4])
    assert Poly.monomial(3) == Poly([0, 0, 0, 1])
    assert Poly.monomial(2, 5) == Poly([0, 0, 5])
    with pytest.raises(ValueError):
        Poly.monomial(-1)


def test_eval_examples():
    assert Poly([1, 0, 1])(3) == 10
    assert Poly.zero()(7) == 0
    assert Poly([3, 2])(5) == 13


def test_eval_matches_power_sum_reference():
    rng = random.Random(7)
    for _ in range(300):
        p = rand_poly(rng)
        x = rng.randint(-50, 50)
        assert p(x) == poly_eval_reference(p.coeffs, x)


def test_ring_op_examples():
    assert Poly([-1, 1]) * Poly([-2, 1]) == Poly([2, -3, 1])
    assert Poly([0, 1]) + Poly([0, -1]) == Poly.zero()
    assert Poly([1, 1]) * 0 == Poly.zero()
    assert 3 * Poly([1, 1]) == Poly([3, 3])
    assert Poly([5, 1]) - Poly([5, 1]) == Poly.zero()


def test_ring_laws_on_random_triples():
    rng = random.Random(20260810)
    for _ in range(1000):
        p, q, r = (rand_poly(rng) for _ in range(3))
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


def test_eval_is_ring_homomorphism():
    rng = random.Random(11)
    for _ in range(300):
        p, q = rand_poly(rng), rand_poly(rng)
        x = rng.randint(-20, 20)
        assert (p * q)(x) == p(x) * q(x)
        assert (p + q)(x) == p(x) + q(x)


def test_poly_is_hashable_value():
    assert len({Poly([0, 1]), Poly([0, 1, 0]), Poly([1, 1])}) == 2


def test_str_and_repr():
    assert str(Poly([3, -4, 1])) == "x^2 - 4x + 3"
    assert str(Poly([0, 2])) == "2x"
    assert str(Poly.zero()) == "0"
    assert str(Poly([-7])) == "-7"
    assert repr(Poly([3, -4, 1])) == "Poly([3, -4, 1])"


def test_linear_product_empty_and_single():
    assert linear_product(1, 1, 1) == Poly([1])
    assert linear_product(1, 2, 2) == Poly([-1, 1])


def test_linear_product_skip_in_middle():
    # (x-1)(x-3), expansion frozen from the factor-expansion oracle
    assert linear_product(1, 3, 2) == Poly([3, -4, 1])


def test_linear_product_matches_expansion_oracle():
    for m, n in ((2, 6), (1, 8), (4, 4)):
        for skip in range(m, n + 1):
            roots = [j for j in range(m, n + 1) if j != skip]
            assert linear_product(m, n, skip).coeffs == tuple(expand_linear_factors(roots))


def test_linear_product_rejects_bad_ranges():
    with pytest.raises(ValueError):
        linear_product(3, 2, 3)
    with pytest.raises(ValueError):
        linear_product(1, 3, 4)
    with pytest.raises(ValueError):
        linear_product(2, 3, 1)


def test_verify_identity_single_point():
    rep = verify_identity(5, 5)
    assert rep.holds
    assert rep.lhs == Poly([1])
    assert rep.expected == 1


def test_verify_identity_two_points():
    # -(x-2) + (x-1) collapses to the constant 1
    rep = verify_identity(1, 2)
    assert rep.holds
    assert rep.lhs == Poly([1])


def test_verify_identity_wider_range():
    rep = verify_identity(2, 5)
    assert rep.holds
    assert rep.lhs == Poly([6])
    assert rep.expected == math.factorial(3)


def test_verify_identity_rejects_bad_range():
    with pytest.raises(ValueError):
        verify_identity(3, 2)
    with pytest.raises(ValueError):
        verify_identity(0, 2)


def test_identity_sweep_with_pointwise_cross_check():
    # symbolic expansion and integer-only evaluation must agree everywhere
    for n in range(1, 13):
        for m in range(1, n + 1):
            rep = verify_identity(m, n)
            assert rep.holds, (m, n)
            deg = n - m
            for x in range(n + 1, n + deg + 3):
                assert identity_lhs_value(m, n, x) == rep.expected, (m, n, x)


def test_identity_lhs_value_at_arbitrary_points():
    assert identity_lhs_value(2, 5, 0) == 6
    assert identity_lhs_value(1, 2, 100) == 1
    with pytest.raises(ValueError):
        identity_lhs_value(2, 1, 0)
