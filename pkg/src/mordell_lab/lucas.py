"""Lucas-type sequences u, v and the quartic curves y^2 = d^2(t^2+4) x^4 - 4.

With u0 = 0, u1 = 1, u_{j+2} = t u_{j+1} + u_j and companion v0 = 2,
v1 = t, the exact identity

    (t^2 + 4) u_j^2 + 4 (-1)^j = v_j^2

holds for every j, so odd-index square terms u_j = x^2 give integral
points (x, v_j) on y^2 = (t^2 + 4) x^4 - 4.  Point lists use orbit
representatives x >= 0, y >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .classfield import fundamental_discriminant, fundamental_unit
from .intutil import PreconditionError, is_perfect_square, is_prime, is_squarefree, sieve_primes, squarefree_part

__all__ = [
    "LucasContext",
    "QuarticCurve",
    "lucas_u",
    "lucas_v",
    "find_square_u",
    "quartic_points",
    "check_bijection",
    "is_squarefree",
    "unit_hypothesis_holds",
    "lucas_prime_density",
]


@dataclass(frozen=True)
class LucasContext:
    """Recurrence parameter t != 0."""

    t: int

    def __post_init__(self):
        if self.t == 0:
            raise PreconditionError("t must be nonzero")


@dataclass(frozen=True)
class QuarticCurve:
    """y^2 = d^2 (t^2 + 4) x^4 - 4."""

    t: int
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise PreconditionError("d must be >= 1")

    @property
    def coefficient(self) -> int:
        return self.d * self.d * (self.t * self.t + 4)


def _lucas_pair(ctx: LucasContext, j: int) -> tuple[int, int]:
    if j < 0:
        raise PreconditionError("index must be >= 0")
    u_prev, u = 0, 1  # u_0, u_1
    v_prev, v = 2, ctx.t  # v_0, v_1
    if j == 0:
        return 0, 2
    for _ in range(j - 1):
        u_prev, u = u, ctx.t * u + u_prev
        v_prev, v = v, ctx.t * v + v_prev
    return u, v


def lucas_u(ctx: LucasContext | int, j: int) -> int:
    ctx = ctx if isinstance(ctx, LucasContext) else LucasContext(ctx)
    return _lucas_pair(ctx, j)[0]


def lucas_v(ctx: LucasContext | int, j: int) -> int:
    ctx = ctx if isinstance(ctx, LucasContext) else LucasContext(ctx)
    return _lucas_pair(ctx, j)[1]


def find_square_u(ctx: LucasContext | int, j_max: int = 99) -> list[int]:
    """All odd j <= j_max with u_j a perfect square."""
    ctx = ctx if isinstance(ctx, LucasContext) else LucasContext(ctx)
    if j_max < 1:
        raise PreconditionError("j_max must be >= 1")
    out = []
    u_prev, u = 0, 1
    for j in range(1, j_max + 1):
        if j % 2 and u >= 0 and is_perfect_square(u) is not None:
            out.append(j)
        u_prev, u = u, ctx.t * u + u_prev
    return out


def quartic_points(curve: QuarticCurve, x_max: int = 10**4) -> list[tuple[int, int]]:
    """Orbit representatives (x >= 0, y >= 0) with y^2 = D x^4 - 4, x <= x_max."""
    if x_max < 1:
        raise PreconditionError("x_max must be >= 1")
    big_d = curve.coefficient
    out = []
    for x in range(0, x_max + 1):
        r = is_perfect_square(big_d * x**4 - 4)
        if r is not None:
            out.append((x, r))
    return out


def check_bijection(ctx: LucasContext | int, j_max: int = 99, x_max: int = 10**4) -> bool:
    """Square odd-index terms and d = 1 quartic points match 1:1.

    The square u_j maps to the point (sqrt(u_j), v_j); the windows must
    be large enough that both sides are plausibly complete.
    """
    ctx = ctx if isinstance(ctx, LucasContext) else LucasContext(ctx)
    squares = find_square_u(ctx, j_max)
    points = quartic_points(QuarticCurve(ctx.t, 1), x_max)
    if len(squares) != len(points):
        return False
    point_set = set(points)
    for j in squares:
        u, v = _lucas_pair(ctx, j)
        root = is_perfect_square(u)
        if root is None or (root, abs(v)) not in point_set:
            return False
    return True


def unit_hypothesis_holds(t: int) -> bool:
    """Is (t + sqrt(t^2 + 4))/2 the fundamental unit of Q(sqrt(t^2+4))?

    t^2 + 4 is reduced to its squarefree kernel k, so the claimed unit is
    compared against the continued-fraction unit of the fundamental
    discriminant: (t + m sqrt(k))/2 with m^2 k = t^2 + 4.
    """
    if t < 1:
        raise PreconditionError("t must be >= 1")
    d = t * t + 4
    k = squarefree_part(d)
    m = isqrt(d // k)
    assert m * m * k == d
    delta = fundamental_discriminant(k).delta
    unit = fundamental_unit(delta)
    if delta == k:
        return (unit.x, unit.y) == (t, m)
    # delta = 4k: the unit is x/2 + y sqrt(k); claimed t/2 + (m/2) sqrt(k)
    return unit.x == t and 2 * unit.y == m


def lucas_prime_density(n_max: int) -> tuple[int, int]:
    """(rho, pi): odd-index classical Lucas primes <= N versus all primes <= N.

    rho counts primes p = L_{2n+1} with n >= 1 for L0 = 2, L1 = 1,
    L_j = L_{j-1} + L_{j-2}; pi is the sieve count.
    """
    if n_max < 2:
        raise PreconditionError("N must be >= 2")
    pi = len(sieve_primes(n_max))
    rho = 0
    l_prev, l_cur = 2, 1  # L_0, L_1
    j = 1
    while True:
        l_prev, l_cur = l_cur, l_prev + l_cur
        j += 1
        if j % 2 == 0:
            continue
        if l_cur > n_max:
            break
        if j >= 3 and is_prime(l_cur):
            rho += 1
    return rho, pi
