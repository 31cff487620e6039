"""Elementary number theory on small positive integers.

Everything here is exact integer arithmetic. Factorization is plain trial
division, which is plenty for orders up to a few times 10^4.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    @property
    def smallest_prime(self) -> int:
        """p1, the least prime dividing n."""
        if not self.factors:
            raise ValueError("1 has no prime factors")
        return self.factors[0][0]

    @property
    def smallest_prime_exponent(self) -> int:
        if not self.factors:
            raise ValueError("1 has no prime factors")
        return self.factors[0][1]

    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def is_prime_power(self) -> bool:
        return len(self.factors) == 1


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    _require_positive(n)
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % k for k in range(2, isqrt(p) + 1))


def euler_phi(n: int) -> int:
    result = 1
    for p, a in factorize(n).factors:
        result *= p ** (a - 1) * (p - 1)
    return result


def moebius(n: int) -> int:
    factors = factorize(n).factors
    if any(a > 1 for _, a in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending (n included)."""
    _require_positive(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def proper_divisors(n: int) -> list[int]:
    """D_n: the divisors of n other than n itself."""
    if n <= 1:
        raise ValueError(f"proper divisor set requires n >= 2, got {n}")
    return divisors(n)[:-1]


def p_adic_valuation(p: int, n: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    _require_positive(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def t_index(n: int, j: int) -> int:
    """n / gcd(n, j), with gcd(n, 0) = n."""
    _require_positive(n)
    if j < 0:
        raise ValueError(f"index must be nonnegative, got {j}")
    return n // gcd(n, j)


def ramanujan(j: int, n: int) -> int:
    """Ramanujan sum c(j, n) = mu(t) * phi(n) / phi(t) with t = n / gcd(n, j).

    Equal to the sum of the j-th powers of the primitive n-th roots of unity.
    ``j`` may be any nonnegative integer; it is reduced mod n.
    """
    _require_positive(n)
    if j < 0:
        raise ValueError(f"index must be nonnegative, got {j}")
    t = t_index(n, j % n)
    mu = moebius(t)
    if mu == 0:
        return 0
    # phi(t) divides phi(n) whenever t | n
    return mu * (euler_phi(n) // euler_phi(t))
