"""Independent reference computations used only by the tests.

Nothing here calls into lcmlab: these are the second routes that the
package's results are compared against.
"""

import math


def sieve_primes(n: int) -> list[int]:
    """Primes <= n by a plain bytearray sieve."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = b"\x00" * len(range(start, n + 1, p))
    return [i for i in range(2, n + 1) if sieve[i]]


def prime_power_lcm(n: int) -> int:
    """lcm(1..n) as the product over primes p <= n of the largest p^k <= n."""
    out = 1
    for p in sieve_primes(n):
        pk = p
        while pk * p <= n:
            pk *= p
        out *= pk
    return out


def fold_lcm(values) -> int:
    """Sequential left fold of the binary lcm over absolute values."""
    acc = None
    for v in values:
        acc = abs(v) if acc is None else math.lcm(acc, v)
    assert acc is not None, "fold_lcm needs at least one value"
    return acc


def poly_eval_reference(coeffs, x: int) -> int:
    """Direct power-sum evaluation, no Horner."""
    return sum(c * x**i for i, c in enumerate(coeffs))


def expand_linear_factors(roots) -> list[int]:
    """Coefficients (constant term first) of prod (x - r) over the roots."""
    coeffs = [1]
    for r in roots:
        new = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] += c
            new[i] -= c * r
        coeffs = new
    return coeffs
