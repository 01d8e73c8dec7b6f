"""Every inequality the package decides, as exact integer comparisons.

Each check returns a BoundReport whose witness records the two integers
actually compared and the relation between them, so ``holds`` can always
be reproduced from the witness alone. No float is involved anywhere on a
decision path.

Inequalities that contain roots or fractions are first cleared into pure
integer form: s-th roots by raising both (nonnegative) sides to the s-th
power, denominators by cross-multiplying with a positive factor. Both
transforms preserve order, so nothing is lost.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .lcm_engine import RangeLcmRequest, half_range, lcm2, lcm_range
from .polynomial import Poly


class BoundKind(Enum):
    MAIN_THEOREM = "main-theorem"
    LEMMA_KEY = "lemma-key"
    KEY1 = "key1"
    KEY2 = "key2"
    LEMMA22 = "lemma22"
    NAIR = "nair"
    HANSON = "hanson"
    HALF_RANGE_LN = "half-range-ln"


@dataclass(frozen=True)
class Comparison:
    """Two exact integers and the relation decided between them."""

    lhs: int
    op: str  # ">=", ">", or "<"
    rhs: int

    def verify(self) -> bool:
        """Redo the comparison from the recorded integers."""
        if self.op == ">=":
            return self.lhs >= self.rhs
        if self.op == ">":
            return self.lhs > self.rhs
        if self.op == "<":
            return self.lhs < self.rhs
        raise ValueError(f"unknown comparison operator {self.op!r}")

    def __str__(self) -> str:
        return f"{self.lhs} {self.op} {self.rhs}"


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one bound check.

    ``lhs`` is the headline quantity (the lcm, or the count side for the
    central-binomial check); ``witness`` holds the exact comparison that
    decided ``holds``. ``in_claimed_range`` is False when the input lies
    outside the range for which the bound is asserted, so sweeps can tell
    "bound silent" apart from "bound violated".
    """

    kind: BoundKind
    holds: bool
    lhs: int
    rhs_description: str
    witness: Comparison
    in_claimed_range: bool = True

    def recheck(self) -> bool:
        """Recompute ``holds`` from the witness integers."""
        return self.witness.verify()


def _require_hypothesis_poly(f: Poly) -> int:
    deg = f.degree()
    if deg is None or deg < 1:
        raise ValueError("polynomial must be nonzero with degree >= 1")
    if not f.has_nonneg_coeffs():
        raise ValueError("polynomial must have nonnegative coefficients")
    return deg


def main_theorem_check(f: Poly, n: int, full_range: bool = False) -> BoundReport:
    """Check lcm of f over the upper half range [ceil(n/2), n] against 2^n.

    Requires f with nonnegative coefficients and degree >= 1. With
    ``full_range`` the range starts at 1 instead (the corollary form);
    the threshold 2^n is the same either way.
    """
    _require_hypothesis_poly(f)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    m = 1 if full_range else half_range(n)[0]
    value = lcm_range(RangeLcmRequest(f, m, n))
    witness = Comparison(value, ">=", 2**n)
    return BoundReport(
        kind=BoundKind.MAIN_THEOREM,
        holds=witness.verify(),
        lhs=value,
        rhs_description=f"2^{n}",
        witness=witness,
    )


def lemma_key_check(f: Poly, m: int, n: int) -> BoundReport:
    """Check the product lower bound on lcm(f(m), ..., f(n)), root-free.

    The bound says L >= (1/(n-m)!) * prod_{k=m}^{n} |f(k)/a_s|^(1/s) for
    any degree-s polynomial with leading coefficient a_s. Raising both
    sides to the s-th power and clearing |a_s| turns it into the integer
    comparison

        (L * (n-m)!)^s * |a_s|^(n-m+1)  >=  prod_{k=m}^{n} |f(k)|

    which is what the witness records. If some f(k) == 0 both sides are 0
    and the bound holds as 0 >= 0.
    """
    deg = f.degree()
    if deg is None or deg < 1:
        raise ValueError("polynomial must be nonzero with degree >= 1")
    value = lcm_range(RangeLcmRequest(f, m, n))
    product = 1
    for k in range(m, n + 1):
        product *= abs(f(k))
    width = n - m
    lifted = (value * math.factorial(width)) ** deg * abs(f.leading_coefficient()) ** (width + 1)
    witness = Comparison(lifted, ">=", product)
    return BoundReport(
        kind=BoundKind.LEMMA_KEY,
        holds=witness.verify(),
        lhs=value,
        rhs_description=f"prod |f(k)|, k in [{m}, {n}] (s-th power, cross-multiplied form)",
        witness=witness,
    )


def lemma22_holds(n: int) -> BoundReport:
    """Check the central-binomial count ceil(n/2) * C(n, ceil(n/2)) > 2^n.

    The bound is claimed for n >= 7 only; smaller n get a report with
    ``in_claimed_range`` False (it genuinely fails at n = 6).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    h = (n + 1) // 2
    count = h * math.comb(n, h)
    witness = Comparison(count, ">", 2**n)
    return BoundReport(
        kind=BoundKind.LEMMA22,
        holds=witness.verify(),
        lhs=count,
        rhs_description=f"2^{n}",
        witness=witness,
        in_claimed_range=n >= 7,
    )


def key1_check(f: Poly, m: int) -> BoundReport:
    """Check lcm(f(m-1), f(m)) >= (m(m-1))^2 / (2m-1) for quadratic f.

    Requires degree exactly 2 and nonnegative coefficients (so the
    leading coefficient is >= 1), and m >= 2. The fraction is cleared by
    multiplying through with 2m-1 > 0.
    """
    if f.degree() != 2:
        raise ValueError(f"polynomial must have degree exactly 2, got {f!r}")
    if not f.has_nonneg_coeffs():
        raise ValueError("polynomial must have nonnegative coefficients")
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    value = lcm2(f(m - 1), f(m))
    witness = Comparison(value * (2 * m - 1), ">=", (m * (m - 1)) ** 2)
    return BoundReport(
        kind=BoundKind.KEY1,
        holds=witness.verify(),
        lhs=value,
        rhs_description=f"(m(m-1))^2 / (2m-1) with m={m} (cross-multiplied)",
        witness=witness,
    )


class ThreeTermCase(Enum):
    FULL = "full"
    HALF = "half"


@dataclass(frozen=True)
class ThreeTermLcm:
    """lcm(a, a+b, a+2b) for coprime a, b, with its case classification."""

    value: int
    case: ThreeTermCase


def key2_lcm(a: int, b: int) -> ThreeTermLcm:
    """lcm(a, a+b, a+2b) for coprime positive a, b, classified.

    Coprimality forces gcd(a, a+b) = gcd(a+b, a+2b) = 1 and
    gcd(a, a+2b) in {1, 2}, so the lcm is the full product a(a+b)(a+2b)
    (FULL) or exactly half of it (HALF, when gcd(a, a+2b) = 2). The
    classification is asserted against the directly computed lcm.
    """
    if a < 1 or b < 1:
        raise ValueError(f"need positive integers, got a={a}, b={b}")
    if math.gcd(a, b) != 1:
        raise ValueError(f"a={a} and b={b} must be coprime")
    value = lcm2(lcm2(a, a + b), a + 2 * b)
    case = ThreeTermCase.FULL if math.gcd(a, a + 2 * b) == 1 else ThreeTermCase.HALF
    product = a * (a + b) * (a + 2 * b)
    expected = product if case is ThreeTermCase.FULL else product // 2
    if value != expected:
        raise ArithmeticError(
            f"three-term lcm classification broke for a={a}, b={b}: "
            f"lcm={value}, classified {case.value} => {expected}"
        )
    return ThreeTermLcm(value=value, case=case)


def _integer_range_lcm(m: int, n: int) -> int:
    return lcm_range(RangeLcmRequest(Poly.x(), m, n))


def nair_check(n: int) -> BoundReport:
    """Check lcm(1..n) >= 2^n (claimed for n >= 7; fails at n = 6)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    value = _integer_range_lcm(1, n)
    witness = Comparison(value, ">=", 2**n)
    return BoundReport(
        kind=BoundKind.NAIR,
        holds=witness.verify(),
        lhs=value,
        rhs_description=f"2^{n}",
        witness=witness,
        in_claimed_range=n >= 7,
    )


def hanson_check(n: int) -> BoundReport:
    """Check lcm(1..n) < 3^n (claimed for every n >= 1)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    value = _integer_range_lcm(1, n)
    witness = Comparison(value, "<", 3**n)
    return BoundReport(
        kind=BoundKind.HANSON,
        holds=witness.verify(),
        lhs=value,
        rhs_description=f"3^{n}",
        witness=witness,
    )


def half_range_ln_check(n: int) -> BoundReport:
    """Check lcm over [ceil(n/2), n] >= 2^(n-1) (claimed for every n >= 1)."""
    m, top = half_range(n)
    value = _integer_range_lcm(m, top)
    witness = Comparison(value, ">=", 2 ** (n - 1))
    return BoundReport(
        kind=BoundKind.HALF_RANGE_LN,
        holds=witness.verify(),
        lhs=value,
        rhs_description=f"2^{n - 1}",
        witness=witness,
    )
