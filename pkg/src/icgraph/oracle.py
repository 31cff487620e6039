"""Brute-force floating point ground truth for the exact spectra.

Kept independent of the Ramanujan-sum path: only ``math.gcd`` and cosine
sums over explicit symbol sets are used here.
"""

from __future__ import annotations

import random
import warnings
from math import gcd
from typing import NamedTuple

import numpy as np

from .core import IcgSpec, make_spec, symbol_set
from .numtheory import proper_divisors

# pre-rounding residuals above this indicate something worse than rounding noise
RESIDUAL_ALARM = 1e-3


class FloatSpectrum(NamedTuple):
    n: int
    values: tuple[float, ...]


class OracleCheck(NamedTuple):
    passed: bool
    max_residual: float
    first_bad_j: int | None
    exact: int | None = None
    approx: float | None = None

    def __bool__(self) -> bool:
        return self.passed


def _cosine_sums(n: int, members) -> np.ndarray:
    s = np.asarray(members, dtype=np.int64)
    if s.size == 0:
        return np.zeros(n)
    # reduce j*s mod n in integers first so the cosine argument stays small
    phase = np.mod(np.outer(np.arange(n, dtype=np.int64), s), n)
    return np.cos(2.0 * np.pi * phase / n).sum(axis=1)


def adjacency_row(spec: IcgSpec) -> list[int]:
    """Row 0 of the adjacency matrix: bit s is set iff gcd(s, n) lies in D."""
    chosen = set(spec.divisors)
    return [0] + [1 if gcd(s, spec.n) in chosen else 0 for s in range(1, spec.n)]


def dft_spectrum(spec: IcgSpec) -> FloatSpectrum:
    members = [s for s, bit in enumerate(adjacency_row(spec)) if bit]
    return FloatSpectrum(spec.n, tuple(float(v) for v in _cosine_sums(spec.n, members)))


def ramanujan_direct(j: int, n: int) -> float:
    """Sum of cos(2 pi j k / n) over units k mod n; n = 1 counts k = 1 as the unit."""
    units = [k for k in range(1, n + 1) if gcd(k, n) == 1]
    return float(np.cos(2.0 * np.pi * np.mod(np.asarray(units) * j, n) / n).sum())


def check_spec_against_oracle(spec: IcgSpec, tol: float = 1e-6, exact_values=None) -> OracleCheck:
    """Compare the exact spectrum of ``spec`` with the DFT of its adjacency row.

    Also requires the symbol set to coincide with the set bits of the row.
    Returns the first offending j on failure (-1 flags a symbol-set mismatch).
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if exact_values is None:
        # the path under test; the oracle side below never touches it
        from .spectrum import full_spectrum

        exact_values = full_spectrum(spec).values
    row = adjacency_row(spec)
    if tuple(s for s, bit in enumerate(row) if bit) != symbol_set(spec).members:
        return OracleCheck(False, float("inf"), -1)
    approx = dft_spectrum(spec).values
    residuals = [abs(e - a) for e, a in zip(exact_values, approx)]
    worst = max(residuals)
    if worst > RESIDUAL_ALARM:
        warnings.warn(f"oracle residual {worst:.3g} for {spec} exceeds {RESIDUAL_ALARM}")
    for j, r in enumerate(residuals):
        if r >= tol:
            return OracleCheck(False, worst, j, exact_values[j], approx[j])
    return OracleCheck(True, worst, None)


def sample_specs(rng: random.Random, n_low: int, n_high: int, count: int) -> list[IcgSpec]:
    """Draw ``count`` (n, D) pairs with n uniform in [n_low, n_high] and D a uniform nonempty subset."""
    out = []
    for _ in range(count):
        n = rng.randint(n_low, n_high)
        ds = proper_divisors(n)
        mask = rng.randrange(1, 1 << len(ds))
        out.append(make_spec(n, [d for i, d in enumerate(ds) if mask >> i & 1]))
    return out
