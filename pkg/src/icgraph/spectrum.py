"""Exact integer spectra of integral circulant graphs.

The j-th eigenvalue of ICG_n(D) is the sum over d in D of the Ramanujan sum
c(j, n/d). Spectra are dense lists indexed by j = 0..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import IcgSpec
from .numtheory import ramanujan


@dataclass(frozen=True)
class Spectrum:
    n: int
    values: tuple[int, ...]

    def to_json(self, spec: IcgSpec) -> dict:
        return {"n": self.n, "divisors": list(spec.divisors), "lambda": list(self.values)}


def ramanujan_row(n: int, d: int) -> list[int]:
    """[c(j, n/d) for j in 0..n-1]: the contribution of one divisor to every eigenvalue."""
    m = n // d
    period = [ramanujan(j, m) for j in range(m)]
    return [period[j % m] for j in range(n)]


def eigenvalue(spec: IcgSpec, j: int) -> int:
    if not 0 <= j < spec.n:
        raise ValueError(f"index {j} outside 0..{spec.n - 1}")
    return sum(ramanujan(j, spec.n // d) for d in spec.divisors)


def full_spectrum(spec: IcgSpec) -> Spectrum:
    values = [0] * spec.n
    for d in spec.divisors:
        for j, c in enumerate(ramanujan_row(spec.n, d)):
            values[j] += c
    return Spectrum(spec.n, tuple(values))


def least_eigenvalue(spec: IcgSpec) -> tuple[int, list[int]]:
    """Smallest eigenvalue over j = 1..n-1 and every index attaining it.

    j = 0 is excluded since it carries the degree.
    """
    values = full_spectrum(spec).values
    low = min(values[1:])
    return low, [j for j in range(1, spec.n) if values[j] == low]


def spread(spec: IcgSpec) -> int:
    values = full_spectrum(spec).values
    return values[0] - min(values[1:])


def complement_spectrum(spec: IcgSpec) -> Spectrum:
    """Spectrum of the complement from mu_0 = n-1-lambda_0, mu_j = -1-lambda_j."""
    values = full_spectrum(spec).values
    mu = [spec.n - 1 - values[0]] + [-1 - v for v in values[1:]]
    return Spectrum(spec.n, tuple(mu))

