"""Exhaustive sweeps over bounded polynomial families, plus batch suites.

A sweep enumerates every polynomial with degree in [1, max_degree],
coefficients in [0, coeff_max] and positive leading coefficient, checks
the 2^n lower bound for each n up to n_max, and collects the failures.
For any such family the failures should be exactly: f = x at
n in {1, 2, 3, 4, 6}, and f = x^s (s >= 2) at n = 1. The x^s failures
are one slice of an infinite family, so reports annotate the truncation.

The suite runners at the bottom batch the module-level invariants of the
bounds and polynomial layers and report counts plus a first
counterexample (there should never be one).
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, Mapping

from .bounds import ThreeTermCase, key1_check, key2_lcm, lemma22_holds, lemma_key_check
from .bounds import hanson_check, half_range_ln_check, main_theorem_check, nair_check
from .lcm_engine import gcd, lcm2
from .polynomial import Poly, identity_lhs_value, verify_identity


class FamilyFilter(Enum):
    ALL = "all"
    MONIC_ONLY = "monic-only"
    NONZERO_CONSTANT_TERM = "nonzero-constant-term"


@dataclass(frozen=True)
class SweepConfig:
    """Declarative description of a polynomial-family search space."""

    max_degree: int
    coeff_max: int
    n_max: int
    family_filter: FamilyFilter = FamilyFilter.ALL

    def __post_init__(self) -> None:
        if self.max_degree < 1:
            raise ValueError(f"max_degree must be >= 1, got {self.max_degree}")
        if self.coeff_max < 0:
            raise ValueError(f"coeff_max must be >= 0, got {self.coeff_max}")
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")


def enumerate_family(cfg: SweepConfig) -> Iterator[Poly]:
    """Yield the family in a fixed order: degree-major, then lexicographic
    on the coefficient tuple read from the leading coefficient down."""
    for degree in range(1, cfg.max_degree + 1):
        max_lead = 1 if cfg.family_filter is FamilyFilter.MONIC_ONLY else cfg.coeff_max
        for lead in range(1, min(max_lead, cfg.coeff_max) + 1):
            for rest in itertools.product(range(cfg.coeff_max + 1), repeat=degree):
                # rest is (a_{d-1}, ..., a_0)
                if cfg.family_filter is FamilyFilter.NONZERO_CONSTANT_TERM and rest[-1] == 0:
                    continue
                yield Poly(rest[::-1] + (lead,))


@dataclass(frozen=True)
class ExceptionRecord:
    """A (polynomial, n) pair whose range lcm undercuts 2^n."""

    f: Poly
    n: int
    lcm_value: int
    threshold: int

    def __post_init__(self) -> None:
        if self.lcm_value >= self.threshold:
            raise ValueError(
                f"not an exception: lcm {self.lcm_value} >= threshold {self.threshold}"
            )

    @property
    def key(self) -> tuple[tuple[int, ...], int]:
        return (self.f.coeffs, self.n)

    @property
    def is_power_family(self) -> bool:
        """True for f = x^s with s >= 2 at n = 1, a member of the infinite
        exception family that any finite sweep truncates."""
        cs = self.f.coeffs
        return self.n == 1 and len(cs) >= 3 and cs[-1] == 1 and not any(cs[:-1])


@dataclass
class CampaignReport:
    """Result of one sweep: what was checked and every bound failure."""

    config: SweepConfig
    full_range: bool
    checked_count: int
    exceptions: list[ExceptionRecord]
    duration_s: float
    notes: list[str] = field(default_factory=list)

    def exception_keys(self) -> set[tuple[tuple[int, ...], int]]:
        return {rec.key for rec in self.exceptions}

    def matches_expected(self) -> bool:
        """True iff the sweep found exactly the predicted exception set."""
        return self.exception_keys() == predicted_exception_keys(self.config)


def predicted_exception_keys(cfg: SweepConfig) -> set[tuple[tuple[int, ...], int]]:
    """The exception set restricted to the sweep's own search space:
    f = x at n in {1, 2, 3, 4, 6} plus f = x^s (2 <= s <= max_degree) at
    n = 1. Identical in half-range and full-range mode."""
    keys: set[tuple[tuple[int, ...], int]] = set()
    if cfg.coeff_max < 1 or cfg.family_filter is FamilyFilter.NONZERO_CONSTANT_TERM:
        return keys
    for n in (1, 2, 3, 4, 6):
        if n <= cfg.n_max:
            keys.add(((0, 1), n))
    for s in range(2, cfg.max_degree + 1):
        keys.add(((0,) * s + (1,), 1))
    return keys


def _check_one_poly(f: Poly, n_max: int, full_range: bool) -> list[ExceptionRecord]:
    found = []
    for n in range(1, n_max + 1):
        report = main_theorem_check(f, n, full_range=full_range)
        if not report.holds:
            found.append(ExceptionRecord(f=f, n=n, lcm_value=report.lhs, threshold=report.witness.rhs))
    return found


def run_campaign(
    cfg: SweepConfig,
    full_range: bool = False,
    workers: int | None = None,
) -> CampaignReport:
    """Check every (f, n) in the family x [1, n_max] and collect failures.

    ``full_range`` switches the checked range from [ceil(n/2), n] to
    [1, n]. ``workers`` spreads polynomials over a thread pool; results
    are merged in enumeration order, so the report is deterministic
    either way.
    """
    start = time.perf_counter()
    family = list(enumerate_family(cfg))
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_poly = list(pool.map(lambda f: _check_one_poly(f, cfg.n_max, full_range), family))
    else:
        per_poly = [_check_one_poly(f, cfg.n_max, full_range) for f in family]
    exceptions = [rec for records in per_poly for rec in records]
    notes = []
    if any(rec.is_power_family for rec in exceptions):
        notes.append(
            "x^s exceptions at n = 1 continue for every s >= 2; "
            f"this sweep truncates the family at degree {cfg.max_degree}"
        )
    return CampaignReport(
        config=cfg,
        full_range=full_range,
        checked_count=len(family) * cfg.n_max,
        exceptions=exceptions,
        duration_s=time.perf_counter() - start,
        notes=notes,
    )


# --- report serialization ---------------------------------------------------

def canonical_json(payload: object) -> str:
    """Serialize with sorted keys and fixed layout; big integers must
    already be decimal strings so nothing exact passes through a float."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def campaign_to_dict(report: CampaignReport) -> dict:
    return {
        "config": {
            "max_degree": report.config.max_degree,
            "coeff_max": report.config.coeff_max,
            "n_max": report.config.n_max,
            "family_filter": report.config.family_filter.value,
            "full_range": report.full_range,
        },
        "checked_count": report.checked_count,
        "exceptions": [
            {
                "coeffs": list(rec.f.coeffs),
                "n": rec.n,
                "lcm": str(rec.lcm_value),
                "threshold": str(rec.threshold),
            }
            for rec in report.exceptions
        ],
        "duration_s": report.duration_s,
        "notes": list(report.notes),
    }


def campaign_to_json(report: CampaignReport) -> str:
    return canonical_json(campaign_to_dict(report))


def campaign_to_csv(report: CampaignReport) -> str:
    """One row per exception; coefficients space-separated, constant first."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["coeffs", "n", "lcm", "threshold"])
    for rec in report.exceptions:
        writer.writerow(
            [" ".join(str(c) for c in rec.f.coeffs), rec.n, str(rec.lcm_value), str(rec.threshold)]
        )
    return buf.getvalue()


# --- batch suites over the bounds / polynomial invariants --------------------

@dataclass
class SuiteResult:
    name: str
    checked: int
    failures: int
    first_counterexample: str | None
    duration_s: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _collect(name: str, cases: Iterator[tuple[bool, str]], start: float) -> SuiteResult:
    checked = failures = 0
    first = None
    for ok, describe in cases:
        checked += 1
        if not ok:
            failures += 1
            if first is None:
                first = describe
    return SuiteResult(name, checked, failures, first, time.perf_counter() - start)


def identity_suite(limit: int = 30) -> SuiteResult:
    """Symbolic collapse of the alternating sum for all 1 <= m <= n <= limit,
    cross-checked pointwise at n - m + 2 integer points."""

    def cases():
        for n in range(1, limit + 1):
            for m in range(1, n + 1):
                rep = verify_identity(m, n)
                ok = rep.holds
                if ok:
                    deg = n - m
                    ok = all(
                        identity_lhs_value(m, n, x) == rep.expected
                        for x in range(n + 1, n + deg + 3)
                    )
                yield ok, f"(m={m}, n={n})"

    return _collect("identity", cases(), time.perf_counter())


def lemma22_suite(limit: int = 64) -> SuiteResult:
    """Central-binomial bound for every n from 7 to limit."""

    def cases():
        for n in range(7, limit + 1):
            yield lemma22_holds(n).holds, f"n={n}"

    return _collect("lemma22", cases(), time.perf_counter())


def lemma_key_suite(limit: int = 10_000, seed: int = 20260810) -> SuiteResult:
    """Randomized product lower bound: ``limit`` draws of (f, m, n) with
    degree 1..4, coefficients in [0, 9], leading >= 1, 1 <= m <= n <= 50."""
    rng = random.Random(seed)

    def cases():
        for _ in range(limit):
            degree = rng.randint(1, 4)
            coeffs = [rng.randint(0, 9) for _ in range(degree)] + [rng.randint(1, 9)]
            f = Poly(coeffs)
            n = rng.randint(1, 50)
            m = rng.randint(1, n)
            yield lemma_key_check(f, m, n).holds, f"(f={f}, m={m}, n={n})"

    return _collect("lemma-key", cases(), time.perf_counter())


def key1_suite(limit: int = 100) -> SuiteResult:
    """Consecutive-value lcm bound for every quadratic with coefficients
    in [0, 9] (leading >= 1) and every m from 2 to limit; exhaustive."""

    def cases():
        for a2 in range(1, 10):
            for a1 in range(10):
                for a0 in range(10):
                    f = Poly((a0, a1, a2))
                    for m in range(2, limit + 1):
                        yield key1_check(f, m).holds, f"(f={f}, m={m})"

    return _collect("key1", cases(), time.perf_counter())


def key2_suite(limit: int = 200) -> SuiteResult:
    """Three-term lcm classification for every coprime a, b <= limit:
    value equals the directly computed lcm, equals the full product or
    half of it, and the HALF case happens exactly when gcd(a, a+2b) = 2."""

    def cases():
        for a in range(1, limit + 1):
            for b in range(1, limit + 1):
                if gcd(a, b) != 1:
                    continue
                res = key2_lcm(a, b)
                direct = lcm2(lcm2(a, a + b), a + 2 * b)
                product = a * (a + b) * (a + 2 * b)
                halved = res.case is ThreeTermCase.HALF
                ok = (
                    res.value == direct
                    and halved == (gcd(a, a + 2 * b) == 2)
                    and res.value * (2 if halved else 1) == product
                )
                yield ok, f"(a={a}, b={b})"

    return _collect("key2", cases(), time.perf_counter())


def nair_suite(limit: int = 1000) -> SuiteResult:
    """lcm(1..n) >= 2^n for every n from 7 to limit."""

    def cases():
        for n in range(7, limit + 1):
            yield nair_check(n).holds, f"n={n}"

    return _collect("nair", cases(), time.perf_counter())


def hanson_suite(limit: int = 1000) -> SuiteResult:
    """lcm(1..n) < 3^n for every n from 1 to limit."""

    def cases():
        for n in range(1, limit + 1):
            yield hanson_check(n).holds, f"n={n}"

    return _collect("hanson", cases(), time.perf_counter())


def half_range_ln_suite(limit: int = 1000) -> SuiteResult:
    """lcm over [ceil(n/2), n] >= 2^(n-1) for every n from 1 to limit."""

    def cases():
        for n in range(1, limit + 1):
            yield half_range_ln_check(n).holds, f"n={n}"

    return _collect("half-range-ln", cases(), time.perf_counter())


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "identity": identity_suite,
    "lemma22": lemma22_suite,
    "lemma-key": lemma_key_suite,
    "key1": key1_suite,
    "key2": key2_suite,
    "nair": nair_suite,
    "hanson": hanson_suite,
    "half-range-ln": half_range_ln_suite,
}

DEFAULT_SUITE_LIMITS: dict[str, int] = {
    "identity": 30,
    "lemma22": 64,
    "lemma-key": 10_000,
    "key1": 100,
    "key2": 200,
    "nair": 1000,
    "hanson": 1000,
    "half-range-ln": 1000,
}


def run_suite(name: str, limit: int | None = None) -> SuiteResult:
    """Run one named suite; ``limit`` falls back to the suite's default."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    return SUITES[name](limit if limit is not None else DEFAULT_SUITE_LIMITS[name])


def run_lemma_suites(limits: Mapping[str, int] | None = None) -> list[SuiteResult]:
    """Run every suite (optionally with per-suite limits) and aggregate."""
    given = dict(limits or {})
    unknown = set(given) - set(SUITES)
    if unknown:
        raise KeyError(f"unknown suite names: {', '.join(sorted(unknown))}")
    return [run_suite(name, given.get(name)) for name in SUITES]


def suite_result_to_dict(result: SuiteResult) -> dict:
    return {
        "name": result.name,
        "checked": result.checked,
        "failures": result.failures,
        "first_counterexample": result.first_counterexample,
        "duration_s": result.duration_s,
        "passed": result.passed,
    }
