"""Experiments backing the analysis of the provers.

Three studies, each reducible to rows of (N, t, e, metric, value):

* v2-expectation: for a prime p with p - 1 = t * 2^e (t odd) and a divisor
  d of t, the mean of v2(order of a) over all a with a^(2d) != 1 has the
  closed form e - 1 + (2d(e-1) + t - d) / (p - 1 - 2d).  Checked in exact
  rational arithmetic against a brute-force sweep of multiplicative orders.
* m-distribution: the number of sqrt_mod calls the randomized prover makes,
  measured by Monte Carlo and, for small N, by exact enumeration of bases;
  its expectation stays below one however large e grows.
* opcount: modular-multiplication tallies of full proofs, split by phase.

Values in emitted rows are integers or exact fractions like 7/5.
"""

from __future__ import annotations

import csv
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Sequence

from .core import ProthForm
from .modular import v2
from .oracle import is_prime_trial, mult_order
from .prover import ProveCounts, RandomizedResult, prove_deterministic, prove_randomized

__all__ = [
    "ExpectationCheck",
    "MStats",
    "OpcountReport",
    "Row",
    "divisors",
    "odd_primes_below",
    "exact_expected_v2",
    "sum_identity_check",
    "v2_expectation_sweep",
    "exact_expected_m",
    "measure_m",
    "opcount_scaling",
    "expectation_rows",
    "m_rows",
    "opcount_rows",
    "write_table",
]

_EXACT_M_LIMIT = 4 * 10**6


def divisors(value: int) -> list[int]:
    """All positive divisors of value, ascending."""
    if value < 1:
        raise ValueError(f"expected a positive integer, got {value}")
    small, large = [], []
    d = 1
    while d * d <= value:
        if value % d == 0:
            small.append(d)
            if d != value // d:
                large.append(value // d)
        d += 1
    return small + large[::-1]


def odd_primes_below(limit: int) -> list[int]:
    """Odd primes < limit by a plain sieve."""
    if limit <= 3:
        return []
    flags = bytearray([1]) * limit
    flags[0] = flags[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [p for p in range(3, limit) if flags[p]]


@dataclass(frozen=True)
class ExpectationCheck:
    """Brute-force versus closed-form order statistics for one (p, d) pair.

    t and e decompose p - 1 = t * 2^e with t odd.  The means are None when
    no base qualifies (only possible for e = 1 and d = t).
    """

    p: int
    d: int
    t: int
    e: int
    qualifying: int
    sum_brute: int
    sum_formula: int
    mean_brute: Fraction | None
    mean_formula: Fraction | None

    @property
    def ok(self) -> bool:
        if self.sum_brute != self.sum_formula:
            return False
        if self.mean_brute is None or self.mean_formula is None:
            return self.qualifying == 0
        return self.mean_brute == self.mean_formula and self.mean_brute > self.e - 1


def _check_from_orders(p: int, d: int, t: int, e: int, orders: Sequence[int]) -> ExpectationCheck:
    total = 0
    count = 0
    for order in orders:
        if (2 * d) % order != 0:
            total += v2(order)
            count += 1
    assert count == p - 1 - 2 * d  # x^(2d) = 1 has exactly 2d roots mod p
    sum_formula = (e - 1) * (p - 1) + t - d
    if count == 0:
        return ExpectationCheck(p, d, t, e, 0, total, sum_formula, None, None)
    mean_formula = e - 1 + Fraction(2 * d * (e - 1) + t - d, count)
    return ExpectationCheck(p, d, t, e, count, total, sum_formula, Fraction(total, count), mean_formula)


def _all_orders(p: int) -> list[int]:
    return [mult_order(p, a) for a in range(2, p - 1)]


def exact_expected_v2(p: int, d: int) -> tuple[Fraction, Fraction]:
    """Mean of v2(order) over bases with a^(2d) != 1 mod p, brute and closed form.

    p must be an odd prime <= 10^4, d a divisor of the odd part of p - 1
    with 2d < p - 1.  Asserts the two means agree exactly and exceed e - 1.
    """
    if p > 10**4 or p < 3 or not is_prime_trial(p):
        raise ValueError(f"p must be an odd prime <= 10^4, got {p}")
    e = v2(p - 1)
    t = (p - 1) >> e
    if d < 1 or t % d != 0:
        raise ValueError(f"d must divide the odd part {t} of p-1, got {d}")
    if 2 * d >= p - 1:
        raise ValueError(f"no base qualifies for d={d} (2d = p-1)")
    check = _check_from_orders(p, d, t, e, _all_orders(p))
    assert check.mean_brute is not None and check.mean_formula is not None
    assert check.mean_brute == check.mean_formula
    assert check.mean_brute > e - 1
    return check.mean_brute, check.mean_formula


def sum_identity_check(p: int, d: int) -> bool:
    """Does sum of v2(order) over qualifying bases equal (e-1)(p-1) + t - d?"""
    if p > 10**4 or p < 3 or not is_prime_trial(p):
        raise ValueError(f"p must be an odd prime <= 10^4, got {p}")
    e = v2(p - 1)
    t = (p - 1) >> e
    if d < 1 or t % d != 0:
        raise ValueError(f"d must divide the odd part {t} of p-1, got {d}")
    check = _check_from_orders(p, d, t, e, _all_orders(p))
    return check.sum_brute == check.sum_formula


def v2_expectation_sweep(pmax: int) -> list[ExpectationCheck]:
    """One ExpectationCheck per odd prime p < pmax and divisor d of its odd part."""
    checks = []
    for p in odd_primes_below(pmax):
        e = v2(p - 1)
        t = (p - 1) >> e
        orders = _all_orders(p)
        for d in divisors(t):
            checks.append(_check_from_orders(p, d, t, e, orders))
    return checks


@dataclass(frozen=True)
class MStats:
    """Distribution of the randomized prover's sqrt_mod call count."""

    form: ProthForm
    trials: int
    seed: int
    histogram: tuple[tuple[int, int], ...]  # (m, occurrences), ascending m
    sample_mean: Fraction
    sample_max: int
    exact_mean: Fraction | None  # enumerated over all bases, small N only


def exact_expected_m(form: ProthForm) -> Fraction:
    """Exact expectation of e - v2(order of a) over bases with a^(2t) != 1.

    Enumerates every base, so form.n must be a prime <= 4*10^6.
    """
    n, t, e = form.n, form.t, form.e
    if n > _EXACT_M_LIMIT:
        raise ValueError(f"exact enumeration limited to n <= {_EXACT_M_LIMIT}, got {n}")
    if not is_prime_trial(n):
        raise ValueError(f"{n} is composite")
    total = 0
    count = 0
    for a in range(2, n - 1):
        x = pow(a, t, n)
        if x * x % n == 1:
            continue
        k = 0
        while x != 1:
            x = x * x % n
            k += 1
        total += e - k
        count += 1
    assert count == n - 1 - 2 * t
    return Fraction(total, count)


def measure_m(form: ProthForm, trials: int, seed: int) -> MStats:
    """Monte Carlo distribution of m over fresh seeds; exact mean when cheap.

    form.n must be prime (checked by trial division); every trial must end
    in a Prime verdict, so a Composite here is an internal error.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if not is_prime_trial(form.n):
        raise ValueError(f"{form.n} is composite")
    rng = random.Random(seed)
    histogram: Counter[int] = Counter()
    total = 0
    for _ in range(trials):
        result = prove_randomized(form, rng.getrandbits(64))
        assert result.verdict.is_prime
        histogram[result.m] += 1
        total += result.m
    exact = exact_expected_m(form) if form.n <= _EXACT_M_LIMIT else None
    return MStats(
        form=form,
        trials=trials,
        seed=seed,
        histogram=tuple(sorted(histogram.items())),
        sample_mean=Fraction(total, trials),
        sample_max=max(m for m, _ in histogram.items()),
        exact_mean=exact,
    )


@dataclass(frozen=True)
class OpcountReport:
    """Multiplication tallies for proving one known prime."""

    form: ProthForm
    deterministic: ProveCounts
    randomized: tuple[ProveCounts, RandomizedResult] | None = None


def opcount_scaling(forms: Iterable[ProthForm], seed: int | None = None) -> list[OpcountReport]:
    """Prove each (prime) form, tallying multiplications per phase.

    With a seed, the randomized prover is tallied as well.
    """
    reports = []
    for form in forms:
        counts = ProveCounts()
        verdict = prove_deterministic(form, counts)
        if not verdict.is_prime:
            raise ValueError(f"{form} is composite; opcount profiles provers on primes")
        randomized = None
        if seed is not None:
            rand_counts = ProveCounts()
            result = prove_randomized(form, seed, rand_counts)
            assert result.verdict.is_prime
            randomized = (rand_counts, result)
        reports.append(OpcountReport(form, counts, randomized))
    return reports


Row = tuple[int, int, int, str, str]


def _fmt(value: int | Fraction) -> str:
    return str(value)


def expectation_rows(checks: Iterable[ExpectationCheck]) -> list[Row]:
    rows: list[Row] = []
    for c in checks:
        key = (c.p, c.t, c.e)
        rows.append((*key, f"v2_sum_brute_d{c.d}", _fmt(c.sum_brute)))
        rows.append((*key, f"v2_sum_formula_d{c.d}", _fmt(c.sum_formula)))
        if c.mean_brute is not None and c.mean_formula is not None:
            rows.append((*key, f"v2_mean_brute_d{c.d}", _fmt(c.mean_brute)))
            rows.append((*key, f"v2_mean_formula_d{c.d}", _fmt(c.mean_formula)))
    return rows


def m_rows(stats: MStats) -> list[Row]:
    key = (stats.form.n, stats.form.t, stats.form.e)
    rows: list[Row] = [
        (*key, "m_trials", _fmt(stats.trials)),
        (*key, "m_sample_mean", _fmt(stats.sample_mean)),
        (*key, "m_sample_max", _fmt(stats.sample_max)),
    ]
    if stats.exact_mean is not None:
        rows.append((*key, "m_exact_mean", _fmt(stats.exact_mean)))
    for m, hits in stats.histogram:
        rows.append((*key, f"m_count_{m}", _fmt(hits)))
    return rows


def opcount_rows(reports: Iterable[OpcountReport]) -> list[Row]:
    rows: list[Row] = []
    for r in reports:
        key = (r.form.n, r.form.t, r.form.e)
        det = r.deterministic
        rows.append((*key, "det_step1_mults", _fmt(det.step1)))
        rows.append((*key, "det_step2_mults", _fmt(det.step2)))
        rows.append((*key, "det_sqrt_calls", _fmt(len(det.sqrts))))
        rows.append((*key, "det_scan_mults", _fmt(sum(c.scan for c in det.sqrts))))
        rows.append((*key, "det_power_mults", _fmt(sum(c.power for c in det.sqrts))))
        if r.randomized is not None:
            rand_counts, result = r.randomized
            rows.append((*key, "rand_step2_mults", _fmt(rand_counts.step2)))
            rows.append((*key, "rand_sqrt_calls", _fmt(result.m)))
            rows.append((*key, "rand_draws", _fmt(result.draws)))
    return rows


def write_table(rows: Iterable[Row], stream: IO[str]) -> None:
    """Emit rows as CSV with the header N,t,e,metric,value."""
    writer = csv.writer(stream)
    writer.writerow(["N", "t", "e", "metric", "value"])
    for row in rows:
        writer.writerow(row)
