"""Exact univariate polynomial arithmetic over Python's unbounded integers.

Coefficients are stored densely: ``coeffs[i]`` is the coefficient of
``x**i``. The zero polynomial is the empty tuple, so a nonzero polynomial
always keeps a nonzero leading coefficient and ``degree()`` is simply
``len(coeffs) - 1``. Degrees stay small here (a few dozen at most), which
makes the dense representation the right trade-off.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union


class Poly:
    """Integer-coefficient polynomial with exact ring operations.

    Instances behave as values: `+`, `-`, `*` build new polynomials,
    `p(x)` evaluates by Horner's rule, and equal coefficient vectors
    hash and compare equal. Multiplying by a plain ``int`` scales.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "Poly":
        """coeff * x**power."""
        if power < 0:
            raise ValueError(f"power must be >= 0, got {power}")
        return cls((0,) * power + (coeff,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int | None:
        """Degree of the polynomial, or None for the zero polynomial."""
        if not self.coeffs:
            return None
        return len(self.coeffs) - 1

    def leading_coefficient(self) -> int:
        """Highest-order coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def has_nonneg_coeffs(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, int):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    def __rmul__(self, other: int) -> "Poly":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                base = "x" if i == 1 else f"x^{i}"
                term = base if mag == 1 else f"{mag}{base}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def linear_product(m: int, n: int, skip: int) -> Poly:
    """Product of (x - j) over j in [m, n] with j == skip left out.

    The empty product (m == n == skip) is the constant polynomial 1.
    """
    if m > n:
        raise ValueError(f"need m <= n, got m={m}, n={n}")
    if not m <= skip <= n:
        raise ValueError(f"skip must lie in [{m}, {n}], got {skip}")
    p = Poly((1,))
    for j in range(m, n + 1):
        if j == skip:
            continue
        p = p * Poly((-j, 1))
    return p


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one symbolic collapse check of the alternating sum."""

    m: int
    n: int
    holds: bool
    lhs: Poly
    expected: int


def verify_identity(m: int, n: int) -> IdentityReport:
    """Check symbolically that the alternating binomial-weighted sum of
    skip-one linear products collapses to the constant (n - m)!.

    Expands sum_{k=m}^{n} (-1)^(n-k) * C(n-m, k-m) * prod_{j != k} (x - j)
    in exact polynomial arithmetic and compares against the constant.
    The returned report keeps the computed left-hand side for diagnostics.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    lhs = Poly()
    for k in range(m, n + 1):
        weight = math.comb(n - m, k - m)
        if (n - k) % 2:
            weight = -weight
        lhs = lhs + linear_product(m, n, k) * weight
    expected = math.factorial(n - m)
    return IdentityReport(m=m, n=n, holds=lhs == Poly((expected,)), lhs=lhs, expected=expected)


def identity_lhs_value(m: int, n: int, x: int) -> int:
    """Evaluate the same alternating sum at an integer point.

    Works purely on integers (no polynomial expansion), so it serves as an
    independent cross-check of verify_identity: at any x the value must be
    (n - m)!.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    total = 0
    for k in range(m, n + 1):
        prod = 1
        for j in range(m, n + 1):
            if j != k:
                prod *= x - j
        weight = math.comb(n - m, k - m)
        total += -weight * prod if (n - k) % 2 else weight * prod
    return total
