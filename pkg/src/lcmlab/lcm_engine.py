"""Exact gcd/lcm primitives and lcms of polynomial value ranges.

Every quantity here is an unbounded Python integer. The one float in the
module, ``PsiValue.log_value``, is derived after the fact for display and
never feeds a comparison.

Conventions: gcd and lcm absorb signs, and the lcm of a multiset that
contains 0 is 0 (so a vanishing polynomial value makes the whole range
lcm 0 rather than an error).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .polynomial import Poly

# Range widths above this are reduced as a balanced tree; at or below,
# a plain fold. lcm is associative and commutative, so both shapes (and
# any worker partitioning) give the identical result.
TREE_FOLD_THRESHOLD = 64


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor; gcd(0, 0) == 0."""
    return math.gcd(a, b)


def lcm2(a: int, b: int) -> int:
    """Least common multiple of |a| and |b|; 0 if either argument is 0."""
    return math.lcm(a, b)


@dataclass(frozen=True)
class RangeLcmRequest:
    """A polynomial f and an evaluation range [m, n] with 1 <= m <= n."""

    f: Poly
    m: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.m <= self.n:
            raise ValueError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")

    @classmethod
    def half_range(cls, f: Poly, n: int) -> "RangeLcmRequest":
        """Request over [ceil(n/2), n]."""
        m, n = half_range(n)
        return cls(f, m, n)

    @property
    def width(self) -> int:
        return self.n - self.m + 1


def half_range(n: int) -> tuple[int, int]:
    """(ceil(n/2), n): the upper half of [1, n], endpoints included."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return ((n + 1) // 2, n)


def _tree_lcm(values: Sequence[int], threshold: int) -> int:
    if len(values) <= threshold:
        return math.lcm(*values)
    mid = len(values) // 2
    return math.lcm(_tree_lcm(values[:mid], threshold), _tree_lcm(values[mid:], threshold))


def lcm_range(
    req: RangeLcmRequest,
    workers: int | None = None,
    tree_threshold: int = TREE_FOLD_THRESHOLD,
) -> int:
    """lcm of {|f(i)| : m <= i <= n}; 0 iff some f(i) == 0.

    Reduction is a balanced tree above ``tree_threshold``; ``workers``
    (optional) splits the evaluation and partial reductions across a
    thread pool. The result does not depend on either knob.
    """
    if tree_threshold < 1:
        raise ValueError(f"tree_threshold must be >= 1, got {tree_threshold}")
    points = range(req.m, req.n + 1)
    if workers is not None and workers > 1 and req.width > tree_threshold:
        chunk = -(-req.width // workers)
        parts = [points[i : i + chunk] for i in range(0, req.width, chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(
                pool.map(lambda part: _tree_lcm([abs(req.f(i)) for i in part], tree_threshold), parts)
            )
        return _tree_lcm(partials, tree_threshold)
    return _tree_lcm([abs(req.f(i)) for i in points], tree_threshold)


@dataclass(frozen=True)
class PsiValue:
    """lcm(1..n) with its natural log and bit length (both derived)."""

    n: int
    lcm_value: int
    log_value: float  # display only, never compared
    bit_length: int


def chebyshev_psi(n: int) -> PsiValue:
    """Chebyshev psi at n: the exact lcm(1..n), plus log and bit length.

    The lcm is computed exactly; the log is attached afterwards so that a
    prime-power sieve can stay an independent oracle in the tests.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    value = lcm_range(RangeLcmRequest(Poly.x(), 1, n))
    return PsiValue(n=n, lcm_value=value, log_value=math.log(value), bit_length=value.bit_length())
