"""
Integer utilities: extended gcd, modular inverses, primality and the
validated :class:`Triple` of moduli everything else is built on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .errors import InvalidTriple, NotCoprime, PrimalityRequired

MAX_N = 1 << 40

# Deterministic for n < 3.3e24, which covers every 64-bit input.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) > 0``."""
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, rem = divmod(a, b)
        a, b = b, rem
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` as an integer in ``[1, m-1]``.

    For ``m == 1`` there is no such integer and :class:`NotCoprime` is raised
    as well, since every caller here expects a genuine unit.
    """
    if m < 2:
        raise NotCoprime(f"modulus must be >= 2, got {m}")
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise NotCoprime(f"gcd({a}, {m}) = {g}")
    return x % m


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def icbrt(n: int) -> int:
    """Floor of the real cube root of ``n >= 0``, exact."""
    if n < 0:
        raise ValueError("negative input")
    x = round(n ** (1 / 3)) if n else 0
    while x**3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


@dataclass(frozen=True)
class Triple:
    """Three pairwise coprime moduli, stored ascending.

    ``labels`` keeps the order in which the caller supplied them.
    """

    p: int
    q: int
    r: int
    strict_primes: bool = False
    labels: tuple[int, int, int] = field(default=(0, 0, 0), compare=False)

    @property
    def moduli(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @property
    def n(self) -> int:
        return self.p * self.q * self.r

    @property
    def phi(self) -> int:
        return (self.p - 1) * (self.q - 1) * (self.r - 1)

    def others(self, x: int) -> tuple[int, int]:
        """The two moduli other than ``x``, in triple order."""
        y, z = (m for m in self.moduli if m != x)
        return y, z

    def __str__(self) -> str:
        return f"({self.p}, {self.q}, {self.r})"


def validate_triple(p: int, q: int, r: int, require_primes: bool = False) -> Triple:
    values = (p, q, r)
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidTriple(f"moduli must be integers, got {v!r}")
        if v <= 2:
            raise InvalidTriple(f"every modulus must be > 2, got {v}")
    if len(set(values)) != 3:
        raise InvalidTriple(f"moduli must be distinct: {values}")
    for x, y in combinations(values, 2):
        if gcd(x, y) != 1:
            raise InvalidTriple(f"not pairwise coprime: gcd({x}, {y}) = {gcd(x, y)}")
    if p * q * r > MAX_N:
        raise InvalidTriple(f"n = {p * q * r} exceeds 2^40")
    primes = all(is_prime(v) for v in values)
    if require_primes and not primes:
        bad = [v for v in values if not is_prime(v)]
        raise PrimalityRequired(f"composite moduli: {bad}")
    a, b, c = sorted(values)
    return Triple(a, b, c, strict_primes=primes, labels=(p, q, r))
