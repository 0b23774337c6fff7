"""Fully explicit bound evaluators for integral points on elliptic curves.

Exact bounds (Bennett's 10 * 3^omega, the Alpoge-Ho divisor product) are
returned as arbitrary-precision integers.  Bounds that overflow any
fixed-width float (Hajdu-Herendi, the S-integer bound) are returned on a
natural-log scale.  Shapes that carry an unpublished O-constant take the
constant from the caller and are labeled accordingly.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .intutil import (
    FactoredInteger,
    PreconditionError,
    factorize,
    nu_p,
    omega,
)

__all__ = [
    "FactoredInteger",
    "factorize",
    "omega",
    "nu_p",
    "bennett_cubic_bound",
    "alpoge_ho_product",
    "alpoge_ho_S_bound",
    "helfgott_venkatesh_shape",
    "hajdu_herendi",
    "j_invariant",
    "silverman_rank1_bound",
    "silverman_rank1_applies",
    "bhargava_constant_gate",
]

ALPOGE_HO_CLAMP = 7 ** (2**7)
SILVERMAN_RANK1_BOUND = 328 * 10**31  # 3.28e33, exact


def bennett_cubic_bound(m: int) -> int:
    """10 * 3^omega(m): cap on coprime representations F(x, y) = m for
    cubic forms with nonzero discriminant."""
    if m == 0:
        raise PreconditionError("m must be nonzero")
    return 10 * 3 ** omega(m)


def alpoge_ho_product(rank: int, disc: FactoredInteger | int):
    """2^rank * prod over p^2 | disc of min(4 floor(nu_p/2) + 1, 7^(2^7)).

    The published result carries an implicit O-constant, which is NOT
    included here; this is the bare product.
    """
    if rank < 0:
        raise PreconditionError("rank must be >= 0")
    if isinstance(disc, int):
        disc = factorize(disc)
    out = 1 << rank
    for p, e in disc.factors:
        if e >= 2:
            out *= min(4 * (e // 2) + 1, ALPOGE_HO_CLAMP)
    return out


def alpoge_ho_S_bound(rank: int, s_size: int, cl2: int) -> float:
    """log of 2^rank * C^(2|S|+1) * cl2, C = 7^(2^7); natural log scale."""
    if rank < 0 or s_size < 0 or cl2 < 1:
        raise PreconditionError("need rank, |S| >= 0 and cl2 >= 1")
    return rank * math.log(2) + (2 * s_size + 1) * 2**7 * math.log(7) + math.log(cl2)


def helfgott_venkatesh_shape(rank: int, disc_abs, c: float, n_prime_factors: int | None = None) -> float:
    """c^omega * 1.33^rank * (log|disc|)^2 with the e^O(omega) factor read
    as c^omega for the caller's constant c; shape-only, not a proven bound.

    Pass n_prime_factors explicitly for non-integer |disc|.
    """
    if c <= 0:
        raise PreconditionError("caller constant must be positive")
    if disc_abs <= 1:
        raise PreconditionError("need |disc| > 1")
    if n_prime_factors is None:
        if isinstance(disc_abs, int):
            n_prime_factors = omega(disc_abs)
        else:
            raise PreconditionError("non-integer disc needs an explicit prime-factor count")
    return c**n_prime_factors * 1.33**rank * math.log(disc_abs) ** 2


def hajdu_herendi(a: int, b: int) -> tuple[float, float, float]:
    """Height bound constants for y^2 = x^3 + ax + b.

    With df = -4a^3 - 27b^2 != 0:

        c1 = 32 |df|^(1/2) (8 + 0.5 log|df|)^4 / 3
        c2 = 1e4 * max(16 a^2, 256 |df|^(2/3))

    Returns (c1, c2, log_bound) where log_bound = 5e64 * c1 * log(c1 + log c2)
    is the natural log of the max{|x|, |y|} bound.
    """
    df = -4 * a**3 - 27 * b * b
    if df == 0:
        raise PreconditionError("zero discriminant")
    adf = abs(df)
    c1 = 32 * math.sqrt(adf) * (8 + 0.5 * math.log(adf)) ** 4 / 3
    c2 = 1e4 * max(16.0 * a * a, 256.0 * adf ** (2.0 / 3.0))
    log_bound = 5e64 * c1 * math.log(c1 + math.log(c2))
    return c1, c2, log_bound


def j_invariant(a: int, b: int) -> Fraction:
    """j = 1728 * 4A^3 / (4A^3 + 27B^2), exact rational."""
    den = 4 * a**3 + 27 * b * b
    if den == 0:
        raise PreconditionError("singular curve")
    return Fraction(1728 * 4 * a**3, den)


def silverman_rank1_bound() -> int:
    """The stored constant 3.28e33 for quasi-minimal rank-1 curves with
    integral j-invariant."""
    return SILVERMAN_RANK1_BOUND


def silverman_rank1_applies(a: int, b: int, rank: int) -> bool:
    """Gate: rank 1, j integral, and gcd(a^3, b^2) free of 12th powers.

    The rank is the caller's claim; it is not computed here.
    """
    if rank != 1:
        return False
    if j_invariant(a, b).denominator != 1:
        return False
    g = math.gcd(a**3, b * b)
    if g:
        for p, e in factorize(g).factors if g > 1 else []:
            if e >= 12:
                return False
    return True


def bhargava_constant_gate(c: float, k_max: int) -> bool:
    """Does C |432 k^2|^0.26 exceed 10 (sqrt|k|/pi (0.5 log|k| + 0.716) + 1)
    for every 1 <= k <= k_max?

    The range [1, k_max] is scanned densely.  Above k_max the left side
    grows like k^0.52 against sqrt(k) log k on the right, so the ratio is
    eventually monotone increasing (d/dk [0.02 log k - log log k] > 0 once
    log k > 50); a geometric tail grid up to 1e30 covers the crossover
    region, after which dominance is analytic.
    """
    if c <= 0:
        raise PreconditionError("C must be positive")
    if k_max < 1:
        raise PreconditionError("k_max must be >= 1")

    def holds(k: float) -> bool:
        lhs = c * (432.0 * k * k) ** 0.26
        rhs = 10.0 * (math.sqrt(k) / math.pi * (0.5 * math.log(k) + 0.716) + 1.0)
        return lhs > rhs

    import numpy as np

    ks = np.arange(1, k_max + 1, dtype=np.float64)
    lhs = c * (432.0 * ks * ks) ** 0.26
    rhs = 10.0 * (np.sqrt(ks) / math.pi * (0.5 * np.log(ks) + 0.716) + 1.0)
    if not bool((lhs > rhs).all()):
        return False
    k = float(k_max)
    while k < 1e30:
        k *= 1.5
        if not holds(k):
            return False
    return True
