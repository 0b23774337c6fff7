"""Exact integer arithmetic helpers shared across the toolkit.

Everything here is pure big-integer arithmetic: perfect-square and cube
detection via `math.isqrt`-style roots, a deterministic Miller-Rabin
primality test, trial-division factorization and the classical
multiplicative functions built on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


def is_perfect_square(n: int):
    """Return the nonnegative integer root r with r*r == n, or None.

    Exact for arbitrary-precision n; negative inputs are never squares.
    """
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def icbrt(n: int) -> int:
    """Floor of the real cube root of n (n may be negative)."""
    if n < 0:
        r = icbrt(-n)
        return -r if r * r * r == -n else -r - 1
    if n == 0:
        return 0
    r = round(n ** (1.0 / 3.0)) if n < (1 << 51) else 1 << ((n.bit_length() + 2) // 3)
    # Newton correction; float seed is only a starting point
    while r > 0 and r * r * r > n:
        r = (2 * r + n // (r * r)) // 3
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def crt(r1: int, m1: int, r2: int, m2: int) -> int:
    """Solve x = r1 (mod m1), x = r2 (mod m2); moduli need not be coprime.

    Raises PreconditionError when the congruences are inconsistent.
    """
    g, p, _ = egcd(m1, m2)
    if (r2 - r1) % g:
        raise PreconditionError("incompatible congruences")
    lcm = m1 // g * m2
    return (r1 + (r2 - r1) // g * p % (m2 // g) * m1) % lcm


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the fixed base set is proven complete
    for n < 3.3 * 10**24, far beyond desk scale."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def sieve_primes(n: int) -> list[int]:
    """All primes <= n by a byte sieve."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(n) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = bytearray(len(range(start, n + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def prime_pi(n: int) -> int:
    """pi(n): number of primes <= n (sieve-based, desk scale)."""
    return len(sieve_primes(n))


@dataclass(frozen=True)
class FactoredInteger:
    """A nonzero integer together with the factorization of |n|.

    factors is a tuple of (prime, exponent) pairs with strictly
    increasing primes whose product reconstitutes |n|.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n == 0:
            raise PreconditionError("cannot factor 0")
        m = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise PreconditionError("factors must be (prime, exponent) ascending")
            m *= p**e
            last = p
        if m != abs(self.n):
            raise PreconditionError("factorization does not multiply back to |n|")


_TRIAL_LIMIT = 10**6
_COFACTOR_LIMIT = 10**18


def factorize(n: int) -> FactoredInteger:
    """Trial division up to 10**6 plus a deterministic primality check on
    the cofactor.  Composite cofactors beyond 10**18 are refused: supply
    the factorization yourself via FactoredInteger in that case.
    """
    if n == 0:
        raise PreconditionError("cannot factor 0")
    m = abs(n)
    out: list[tuple[int, int]] = []
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    p = 5
    while p * p <= m and p <= _TRIAL_LIMIT:
        for q in (p, p + 2):
            if m % q == 0:
                e = 0
                while m % q == 0:
                    m //= q
                    e += 1
                out.append((q, e))
        p += 6
    if m > 1:
        if is_prime(m):
            out.append((m, 1))
        elif m > _COFACTOR_LIMIT:
            raise PreconditionError(
                f"composite cofactor {m} exceeds the desk-scale factorization limit; "
                "construct a FactoredInteger with the known factorization"
            )
        else:
            # cofactor <= 1e18 composite with no prime factor <= 1e6 is
            # a semiprime of two primes > 1e6; finish by rho-free scan
            q = _pollard_like(m)
            for f in sorted((q, m // q)):
                out.append((f, 1))
    return FactoredInteger(n, tuple(sorted(out)))


def _pollard_like(m: int) -> int:
    """Brent-cycle factor finder for the rare composite cofactor case."""
    if m % 2 == 0:
        return 2
    x0 = 2
    while True:
        x = y = x0
        d = 1
        while d == 1:
            x = (x * x + 1) % m
            y = (y * y + 1) % m
            y = (y * y + 1) % m
            d = gcd(abs(x - y), m)
        if d != m:
            return d
        x0 += 1


def omega(n: int) -> int:
    """Number of distinct prime factors of |n|; omega(+-1) = 0."""
    return len(factorize(n).factors)


def nu_p(n: int, p: int) -> int:
    """Largest e with p**e dividing n."""
    if n == 0:
        raise PreconditionError("nu_p undefined at 0")
    if p < 2:
        raise PreconditionError("p must be >= 2")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def euler_phi(n: int) -> int:
    """Euler totient from the factorization."""
    if n < 1:
        raise PreconditionError("euler_phi needs n >= 1")
    if n == 1:
        return 1
    out = n
    for p, _ in factorize(n).factors:
        out = out // p * (p - 1)
    return out


def dedekind_psi(n: int) -> int:
    """psi(n) = n * prod_{p | n} (1 + 1/p), exactly."""
    if n < 1:
        raise PreconditionError("psi needs n >= 1")
    if n == 1:
        return 1
    out = n
    for p, _ in factorize(n).factors:
        out = out // p * (p + 1)
    return out


def is_squarefree(n: int) -> bool:
    """True when no square of a prime divides n."""
    if n == 0:
        return False
    return all(e == 1 for _, e in factorize(n).factors)


def squarefree_part(n: int) -> int:
    """The squarefree kernel of n, sign preserved."""
    if n == 0:
        raise PreconditionError("squarefree part undefined at 0")
    out = -1 if n < 0 else 1
    for p, e in factorize(n).factors:
        if e % 2:
            out *= p
    return out
