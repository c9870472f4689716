"""Integer helpers for the non-cross constructions."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from sympy import factorint, primerange


@dataclass(frozen=True, order=True)
class PrimePowerFactor:
    q: int
    r: int
    source: int = 0

    @property
    def power(self) -> int:
        return self.q**self.r


def prime_power_factors(exponents: Sequence[int]) -> list[PrimePowerFactor]:
    """Distinct pairs (q, v_q(n)) over all primes q dividing some n in exponents.

    ``source`` records the first exponent the pair was taken from.
    """
    if not exponents:
        raise ValueError("need at least one exponent")
    seen: dict[tuple[int, int], int] = {}
    for n in exponents:
        if n < 1:
            raise ValueError("exponents must be positive")
        for q, r in factorint(n).items():
            seen.setdefault((q, r), n)
    return [PrimePowerFactor(q, r, src) for (q, r), src in sorted(seen.items())]


def e_value(f: PrimePowerFactor, m: int) -> int:
    """q^(r-1) times the largest power <= m of every other prime p <= m."""
    if f.q > m:
        raise ValueError("prime must not exceed m")
    e = f.q ** (f.r - 1)
    for p in primerange(2, m + 1):
        if p != f.q:
            e *= p ** int(math.floor(math.log(m, p) + 1e-12))
    return e


def omega(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return len(factorint(n)) if n > 1 else 0


def is_prime_power(n: int) -> bool:
    return n > 1 and len(factorint(n)) == 1


def prime_power_count(n: int) -> int:
    """Number of prime powers (primes included) not exceeding n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(1 for k in range(2, n + 1) if is_prime_power(k))


def factorial(n: int) -> int:
    return math.factorial(n)


def valuation(n: int, q: int) -> int:
    v = 0
    while n and n % q == 0:
        n //= q
        v += 1
    return v


@lru_cache(maxsize=4096)
def _small_table(coins: tuple[int, ...], limit: int) -> bytes:
    reach = bytearray(limit + 1)
    reach[0] = 1
    for t in range(1, limit + 1):
        for c in coins:
            if c <= t and reach[t - c]:
                reach[t] = 1
                break
    return bytes(reach)


def coin_representable(t: int, coins: Iterable[int]) -> bool:
    """True iff t is a sum of coins, each used any number of times (t = 0 always is)."""
    if t < 0:
        return False
    if t == 0:
        return True
    cs = tuple(sorted({c for c in coins if c > 0}))
    if not cs:
        return False
    g = math.gcd(*cs)
    if t % g:
        return False
    cs = tuple(c // g for c in cs)
    t //= g
    top = cs[-1]
    # the largest non-representable value of coprime coins is below top^2
    if t >= top * top:
        return True
    return bool(_small_table(cs, top * top)[t])


def minimal_generators(coins: Iterable[int]) -> tuple[int, ...]:
    """Smallest generating set of the monoid spanned by coins."""
    out: list[int] = []
    for c in sorted(set(c for c in coins if c > 0)):
        if not coin_representable(c, out):
            out.append(c)
    return tuple(out)
