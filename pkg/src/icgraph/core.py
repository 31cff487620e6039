"""Integral circulant graphs ICG_n(D) described by their order and divisor set."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .numtheory import euler_phi, factorize, proper_divisors


class SpecError(ValueError):
    """Base class for invalid graph descriptions."""


class NonDivisor(SpecError):
    pass


class OutOfRange(SpecError):
    pass


class EmptyDivisorSet(SpecError):
    pass


class SpecSyntaxError(SpecError):
    pass


@dataclass(frozen=True, order=True)
class IcgSpec:
    """A validated pair (n, D) with D a subset of the proper divisors of n.

    Build instances with :func:`make_spec` or :func:`parse_spec`; the raw
    constructor does not validate.
    """

    n: int
    divisors: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.n}:" + ",".join(map(str, self.divisors))

    @property
    def is_empty(self) -> bool:
        return not self.divisors


@dataclass(frozen=True)
class SymbolSet:
    n: int
    members: tuple[int, ...]


def make_spec(n: int, divisors, allow_empty: bool = False) -> IcgSpec:
    if n < 2:
        raise OutOfRange(f"order must be at least 2, got {n}")
    ds = sorted(set(int(d) for d in divisors))
    for d in ds:
        if d < 1 or d >= n:
            raise OutOfRange(f"divisor {d} outside 1..{n - 1}")
        if n % d:
            raise NonDivisor(f"{d} does not divide {n}")
    if not ds and not allow_empty:
        raise EmptyDivisorSet(f"empty divisor set for n={n}")
    return IcgSpec(n, tuple(ds))


_SPEC_RE = re.compile(r"^([0-9]+):([0-9]+(?:,[0-9]+)*)?$")


def parse_spec(text: str, allow_empty: bool = False) -> IcgSpec:
    """Parse the canonical text form ``n:d1,d2,...`` (e.g. ``12:1,3``)."""
    m = _SPEC_RE.match(text)
    if m is None:
        raise SpecSyntaxError(f"cannot parse {text!r}; expected n:d1,d2,...")
    n = int(m.group(1))
    ds = [int(x) for x in m.group(2).split(",")] if m.group(2) else []
    return make_spec(n, ds, allow_empty=allow_empty)


def gcd_class(n: int, d: int) -> list[int]:
    """G_n(d) = {1 <= k <= n-1 : gcd(k, n) = d}."""
    if d < 1 or d >= n or n % d:
        raise NonDivisor(f"{d} is not a proper divisor of {n}")
    # k = d*m with gcd(m, n/d) = 1
    m = n // d
    return [d * k for k in range(1, m) if gcd(k, m) == 1]


def symbol_set(spec: IcgSpec) -> SymbolSet:
    members: list[int] = []
    for d in spec.divisors:
        members.extend(gcd_class(spec.n, d))
    return SymbolSet(spec.n, tuple(sorted(members)))


def degree(spec: IcgSpec) -> int:
    return sum(euler_phi(spec.n // d) for d in spec.divisors)


def divisor_gcd(divisors) -> int:
    """gcd of a divisor collection; 0 for the empty collection."""
    return gcd(*divisors) if divisors else 0


def is_connected(spec: IcgSpec) -> bool:
    return divisor_gcd(spec.divisors) == 1


def complement_divisors(spec: IcgSpec) -> IcgSpec:
    """The complement graph, ICG_n(D_n minus D). May have an empty divisor set."""
    chosen = set(spec.divisors)
    rest = [d for d in proper_divisors(spec.n) if d not in chosen]
    return IcgSpec(spec.n, tuple(rest))


def coconnected(spec: IcgSpec) -> bool:
    return divisor_gcd(complement_divisors(spec).divisors) == 1


def bar_d_p1(n: int) -> IcgSpec:
    """ICG over the proper divisors of n not divisible by the least prime p1."""
    p1 = factorize(n).smallest_prime
    return make_spec(n, [d for d in proper_divisors(n) if d % p1])


def chain_d_n_d0(n: int, d0: int) -> list[int]:
    """The chain p1^b * d0 for 0 <= b <= alpha1.

    The chain may end in n itself (when d0 = n / p1^alpha1); callers wanting
    proper divisors only must drop it.
    """
    f = factorize(n)
    p1, a1 = f.smallest_prime, f.smallest_prime_exponent
    if d0 < 1 or n % d0:
        raise NonDivisor(f"{d0} does not divide {n}")
    if d0 % p1 == 0:
        raise SpecError(f"chain base {d0} is divisible by p1={p1}")
    return [p1**b * d0 for b in range(a1 + 1)]
