"""Exhaustive search over divisor sets and checks of the extremal results.

For a fixed order n every divisor set D is a subset of the proper divisors
D_n, so the whole family of integral circulant graphs of order n can be
enumerated as bitmasks. Spectra of all subsets in a batch are obtained at
once as (indicator matrix) @ (Ramanujan rows), in exact int64 arithmetic.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator

import numpy as np

from .core import IcgSpec, bar_d_p1, chain_d_n_d0, divisor_gcd
from .numtheory import euler_phi, factorize, p_adic_valuation, proper_divisors
from .spectrum import least_eigenvalue, ramanujan_row

DEFAULT_MAX_SUBSETS = 1 << 20
_BATCH = 1 << 12


class TooManyDivisors(ValueError):
    pass


class GraphClass(enum.Enum):
    ALL = "ALL"
    CONNECTED = "CONNECTED"
    CONNECTED_COCONNECTED = "CONNECTED_COCONNECTED"
    CONNECTED_EXCLUDING_BARDP1 = "CONNECTED_EXCLUDING_BARDP1"


class Objective(enum.Enum):
    MIN_LEAST_EIG = "MIN_LEAST_EIG"
    MAX_SPREAD = "MAX_SPREAD"


class Theorem(enum.Enum):
    LEMMA1 = "LEMMA1"
    THM2 = "THM2"
    THM3 = "THM3"
    THM4 = "THM4"
    THM5 = "THM5"


@dataclass(frozen=True, order=True)
class Achiever:
    divisors: tuple[int, ...]
    witness_j: tuple[int, ...]

    def to_json(self) -> dict:
        return {"divisors": list(self.divisors), "witness_j": list(self.witness_j)}


@dataclass
class ExtremalRecord:
    n: int
    graph_class: GraphClass
    objective: Objective
    value: int | None
    achievers: list[Achiever]
    class_empty: bool = False

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "class": self.graph_class.value,
            "objective": self.objective.value,
            "value": self.value,
            "class_empty": self.class_empty,
            "achievers": [a.to_json() for a in self.achievers],
        }


@dataclass
class VerificationReport:
    theorem: Theorem
    n_from: int
    n_to: int
    failures: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "n_from": self.n_from,
            "n_to": self.n_to,
            "passed": self.passed,
            "failures": self.failures,
            "skipped": self.skipped,
        }


def max_subsets() -> int:
    return int(os.environ.get("ICG_MAX_SUBSETS", DEFAULT_MAX_SUBSETS))


def _guard(n: int) -> list[int]:
    ds = proper_divisors(n)
    limit = max_subsets()
    if (1 << len(ds)) > limit:
        raise TooManyDivisors(f"n={n} has {len(ds)} proper divisors; 2^{len(ds)} subsets exceeds {limit}")
    return ds


def _class_mask(cls: GraphClass, n: int, ds: list[int], bits: np.ndarray) -> np.ndarray:
    """Vectorised class predicate over a batch of subset indicator rows."""
    if cls is GraphClass.ALL:
        return np.ones(len(bits), dtype=bool)
    g = np.zeros(len(bits), dtype=np.int64)
    gc = np.zeros(len(bits), dtype=np.int64)
    for i, d in enumerate(ds):
        g = np.where(bits[:, i], np.gcd(g, d), g)
        gc = np.where(bits[:, i], gc, np.gcd(gc, d))
    keep = g == 1
    if cls is GraphClass.CONNECTED_COCONNECTED:
        keep &= gc == 1
    elif cls is GraphClass.CONNECTED_EXCLUDING_BARDP1:
        p1 = factorize(n).smallest_prime
        bar = np.array([d % p1 != 0 for d in ds])
        keep &= ~np.all(bits.astype(bool) == bar, axis=1)
    return keep


def _batches(n: int, cls: GraphClass) -> Iterator[tuple[np.ndarray, np.ndarray, list[int]]]:
    """Yield (indicator rows, spectra) for every class member, in mask order."""
    ds = _guard(n)
    k = len(ds)
    rows = np.array([ramanujan_row(n, d) for d in ds], dtype=np.int64)
    shifts = np.arange(k, dtype=np.int64)
    total = 1 << k
    for start in range(1, total, _BATCH):
        masks = np.arange(start, min(start + _BATCH, total), dtype=np.int64)
        bits = ((masks[:, None] >> shifts) & 1).astype(np.int64)
        bits = bits[_class_mask(cls, n, ds, bits)]
        if len(bits):
            yield bits, bits @ rows, ds


def _divisors_of(bits_row: np.ndarray, ds: list[int]) -> tuple[int, ...]:
    return tuple(d for d, b in zip(ds, bits_row) if b)


def enumerate_class(n: int, cls: GraphClass) -> Iterator[IcgSpec]:
    """Every nonempty D in the class, once each, ordered lexicographically as integer lists."""
    found = []
    for bits, _, ds in _batches(n, cls):
        found.extend(_divisors_of(row, ds) for row in bits)
    for d in sorted(found):
        yield IcgSpec(n, d)


def extremal_search(n: int, cls: GraphClass, objective: Objective) -> ExtremalRecord:
    best: int | None = None
    achievers: list[Achiever] = []
    for bits, spectra, ds in _batches(n, cls):
        least = spectra[:, 1:].min(axis=1)
        if objective is Objective.MIN_LEAST_EIG:
            score = least
            local = int(score.min())
            better = best is None or local < best
        else:
            score = spectra[:, 0] - least
            local = int(score.max())
            better = best is None or local > best
        if better:
            best, achievers = local, []
        if local != best:
            continue
        for i in np.flatnonzero(score == best):
            witnesses = np.flatnonzero(spectra[i, 1:] == least[i]) + 1
            achievers.append(Achiever(_divisors_of(bits[i], ds), tuple(int(j) for j in witnesses)))
    if best is None:
        return ExtremalRecord(n, cls, objective, None, [], class_empty=True)
    achievers.sort()
    # cross-check the batched path against the per-graph exact spectrum
    for a in achievers:
        low, wit = least_eigenvalue(IcgSpec(n, a.divisors))
        value = low if objective is Objective.MIN_LEAST_EIG else None
        assert tuple(wit) == a.witness_j and (value is None or value == best), a
    return ExtremalRecord(n, cls, objective, best, achievers)


def second_min_least(n: int) -> ExtremalRecord:
    """Least eigenvalue minimum over connected D other than the unique minimiser."""
    if factorize(n).is_prime():
        raise ValueError(f"n={n} is prime; no second minimal least eigenvalue")
    return extremal_search(n, GraphClass.CONNECTED_EXCLUDING_BARDP1, Objective.MIN_LEAST_EIG)


# closed forms -------------------------------------------------------------


def expected_value(theorem: Theorem, n: int) -> int:
    f = factorize(n)
    p1, a1 = f.smallest_prime, f.smallest_prime_exponent
    if theorem is Theorem.THM2:
        return -(n // p1)
    if theorem is Theorem.THM3:
        return n
    if theorem is Theorem.THM4:
        return -(n // p1) + p1 ** (a1 - 1)
    if theorem is Theorem.THM5:
        return -(n // p1) + (p1 - 1 if a1 > 1 else 1)
    raise ValueError(f"{theorem} has no closed-form optimum")


def _multiples_of_n_over_p1(n: int) -> tuple[int, ...]:
    step = n // factorize(n).smallest_prime
    return tuple(range(step, n, step))


def predicted_achievers(n: int, theorem: Theorem) -> list[Achiever]:
    """Equality cases in closed form, with witness indices expanded to explicit lists."""
    f = factorize(n)
    p1, a1 = f.smallest_prime, f.smallest_prime_exponent
    bar = list(bar_d_p1(n).divisors)
    mult = _multiples_of_n_over_p1(n)
    found: dict[tuple[int, ...], set[int]] = {}

    def add(ds, js):
        found.setdefault(tuple(sorted(ds)), set()).update(js)

    if theorem is Theorem.THM2:
        add(bar, mult)
    elif theorem is Theorem.THM4:
        n1 = n // p1**a1
        case_i = [d for d in bar if d != n1]
        if case_i:
            add(case_i, mult)
        if p1 == 2 and n1 == 3:
            js = [j for j in range(1, n) if p_adic_valuation(2, j) == a1 - 1 and j % 3]
            add([2**b for b in range(1, a1 + 1)] + [3], js)
    elif theorem is Theorem.THM5:
        if f.is_prime():
            raise ValueError(f"n={n} is prime")
        if a1 > 1:
            add(bar + [n // p1], mult)
        else:
            add([d for d in bar if d != n // p1], mult)
        if n == 6:
            add([1], [3])
            add([1, 2], [2, 4])
            add([2, 3], [1, 5])
    else:
        raise ValueError(f"no (D, J) prediction for {theorem}")
    return sorted(Achiever(ds, tuple(sorted(js))) for ds, js in found.items())


def predicted_max_spread_sets(n: int) -> list[tuple[int, ...]]:
    """All D whose complement in D_n is empty or has gcd above 1."""
    ds = proper_divisors(n)
    out = []
    for r in range(1, len(ds) + 1):
        for chosen in combinations(ds, r):
            rest = [d for d in ds if d not in chosen]
            if not rest or divisor_gcd(rest) > 1:
                out.append(chosen)
    return sorted(out)


# verification -------------------------------------------------------------


def _fail(n, kind, divisors=None, j=None, expected=None, got=None) -> dict:
    return {
        "n": n,
        "kind": kind,
        "divisors": None if divisors is None else list(divisors),
        "j": j,
        "expected": expected,
        "got": got,
    }


def _compare_achievers(n: int, found: list[Achiever], predicted: list[Achiever]) -> list[dict]:
    got = {a.divisors: list(a.witness_j) for a in found}
    want = {a.divisors: list(a.witness_j) for a in predicted}
    out = []
    for ds in sorted(set(got) | set(want)):
        g, w = got.get(ds), want.get(ds)
        if g != w:
            extra = sorted(set(g or []) ^ set(w or []))
            out.append(_fail(n, "achiever", ds, extra, w, g))
    return out


def lemma1_violations(n: int) -> list[dict]:
    """Chain sums below -phi(n/d0)/(p1-1), compared exactly via cross-multiplication."""
    f = factorize(n)
    p1 = f.smallest_prime
    out = []
    for d0 in bar_d_p1(n).divisors:
        chain = [d for d in chain_d_n_d0(n, d0) if d < n]
        floor = -euler_phi(n // d0)
        rows = {d: ramanujan_row(n, d) for d in chain}
        for r in range(1, len(chain) + 1):
            for chosen in combinations(chain, r):
                for j in range(n):
                    total = sum(rows[d][j] for d in chosen)
                    if total * (p1 - 1) < floor:
                        out.append(_fail(n, "bound", chosen, j, ">=" + str(Fraction(floor, p1 - 1)), total))
    return out


def check_n(theorem: Theorem, n: int) -> tuple[list[dict], list[dict]]:
    """Failures and skip notes for one order n."""
    f = factorize(n)
    if theorem is Theorem.LEMMA1:
        return lemma1_violations(n), []
    if theorem is Theorem.THM5 and f.is_prime():
        return [], [{"n": n, "reason": "prime"}]

    if theorem is Theorem.THM2:
        rec = extremal_search(n, GraphClass.ALL, Objective.MIN_LEAST_EIG)
    elif theorem is Theorem.THM3:
        rec = extremal_search(n, GraphClass.ALL, Objective.MAX_SPREAD)
    elif theorem is Theorem.THM4:
        rec = extremal_search(n, GraphClass.CONNECTED_COCONNECTED, Objective.MIN_LEAST_EIG)
    else:
        rec = second_min_least(n)

    if rec.class_empty:
        if theorem is Theorem.THM4 and f.is_prime_power():
            return [], [{"n": n, "reason": "class_empty"}]
        return [_fail(n, "class_empty", expected="nonempty", got="empty")], []
    if theorem is Theorem.THM4 and f.is_prime_power():
        return [_fail(n, "class_empty", expected="empty", got="nonempty")], []

    failures = []
    want = expected_value(theorem, n)
    if rec.value != want:
        failures.append(_fail(n, "value", expected=want, got=rec.value))
    if theorem is Theorem.THM3:
        got_sets = [a.divisors for a in rec.achievers]
        want_sets = predicted_max_spread_sets(n)
        for ds in sorted(set(got_sets) ^ set(want_sets)):
            failures.append(_fail(n, "achiever", ds, None, ds in want_sets, ds in got_sets))
    else:
        failures.extend(_compare_achievers(n, rec.achievers, predicted_achievers(n, theorem)))
    return failures, []


def _check_n_packed(args):
    return check_n(*args)


def verify_theorem(theorem: Theorem, n_from: int, n_to: int, workers: int = 1) -> VerificationReport:
    n_from = max(n_from, 2)
    jobs = [(theorem, n) for n in range(n_from, n_to + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_n_packed, jobs))
    else:
        results = [check_n(*job) for job in jobs]
    report = VerificationReport(theorem, n_from, n_to)
    for failures, skipped in results:
        report.failures.extend(failures)
        report.skipped.extend(skipped)
    return report
