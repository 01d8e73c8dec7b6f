import math
import random

import pytest

from lcmlab.lcm_engine import (
    PsiValue,
    RangeLcmRequest,
    chebyshev_psi,
    gcd,
    half_range,
    lcm2,
    lcm_range,
)
from lcmlab.polynomial import Poly
from oracles import fold_lcm, prime_power_lcm


def test_gcd_examples():
    assert gcd(12, 18) == 6
    assert gcd(0, 5) == 5
    assert gcd(-4, 6) == 2
    assert gcd(0, 0) == 0


def test_lcm2_examples():
    assert lcm2(4, 6) == 12
    assert lcm2(0, 7) == 0
    assert lcm2(3, 5) == 15
    assert lcm2(-4, 6) == 12


def test_gcd_lcm_product_identity():
    rng = random.Random(5)
    for _ in range(1000):
        a = rng.randint(1, 10**6) * rng.choice((-1, 1))
        b = rng.randint(1, 10**6) * rng.choice((-1, 1))
        assert gcd(a, b) * lcm2(a, b) == abs(a * b)


def test_request_validation():
    with pytest.raises(ValueError):
        RangeLcmRequest(Poly.x(), 3, 2)
    with pytest.raises(ValueError):
        RangeLcmRequest(Poly.x(), 0, 2)
    req = RangeLcmRequest(Poly.x(), 2, 5)
    assert req.width == 4


def test_half_range():
    assert half_range(5) == (3, 5)
    assert half_range(1) == (1, 1)
    assert half_range(6) == (3, 6)
    with pytest.raises(ValueError):
        half_range(0)


def test_half_range_request_constructor():
    req = RangeLcmRequest.half_range(Poly.x(), 5)
    assert (req.m, req.n) == (3, 5)


def test_lcm_range_examples():
    assert lcm_range(RangeLcmRequest(Poly.x(), 3, 5)) == 60
    assert lcm_range(RangeLcmRequest(Poly.x(), 3, 6)) == 60
    assert lcm_range(RangeLcmRequest(Poly([1, 0, 1]), 1, 3)) == 10


def test_lcm_range_zero_value_gives_zero():
    # f = x - 2 vanishes at 2
    assert lcm_range(RangeLcmRequest(Poly([-2, 1]), 1, 3)) == 0


def test_lcm_range_takes_absolute_values():
    # f = x - 10 is negative across [1, 3]
    assert lcm_range(RangeLcmRequest(Poly([-10, 1]), 1, 3)) == lcm2(lcm2(9, 8), 7)


def _random_request(rng, n_top=150):
    degree = rng.randint(1, 3)
    coeffs = [rng.randint(-9, 9) for _ in range(degree)]
    lead = rng.choice([c for c in range(-9, 10) if c != 0])
    f = Poly(coeffs + [lead])
    n = rng.randint(1, n_top)
    m = rng.randint(1, n)
    return RangeLcmRequest(f, m, n)


def test_tree_reduction_matches_sequential_fold():
    rng = random.Random(2026)
    for _ in range(100):
        req = _random_request(rng)
        expected = fold_lcm(req.f(i) for i in range(req.m, req.n + 1))
        assert lcm_range(req) == expected


def test_result_independent_of_partitioning():
    req = RangeLcmRequest(Poly([1, 1, 1]), 1, 301)
    baseline = lcm_range(req)
    assert lcm_range(req, workers=4) == baseline
    assert lcm_range(req, workers=7) == baseline
    assert lcm_range(req, tree_threshold=1) == baseline
    assert lcm_range(req, tree_threshold=10**6) == baseline
    with pytest.raises(ValueError):
        lcm_range(req, tree_threshold=0)


def test_lcm_range_monotone_divisibility():
    rng = random.Random(99)
    for _ in range(50):
        degree = rng.randint(1, 3)
        f = Poly([rng.randint(0, 9) for _ in range(degree)] + [rng.randint(1, 9)])
        m = rng.randint(1, 20)
        n = rng.randint(m, m + 30)
        small = lcm_range(RangeLcmRequest(f, m, n))
        large = lcm_range(RangeLcmRequest(f, m, n + 1))
        assert large % small == 0


def test_psi_small_values():
    assert chebyshev_psi(1) == PsiValue(n=1, lcm_value=1, log_value=0.0, bit_length=1)
    assert chebyshev_psi(7).lcm_value == 420
    assert chebyshev_psi(10).lcm_value == 2520


def test_psi_derived_fields():
    value = chebyshev_psi(50)
    assert value.bit_length == value.lcm_value.bit_length()
    assert value.log_value == math.log(value.lcm_value)
    with pytest.raises(ValueError):
        chebyshev_psi(0)


def test_psi_matches_prime_power_sieve():
    for n in range(1, 301):
        assert chebyshev_psi(n).lcm_value == prime_power_lcm(n), n
