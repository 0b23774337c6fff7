"""Quadratic field arithmetic: characters, class numbers, class groups,
fundamental units and the explicit class-number bounds.

Conventions.  A fundamental discriminant is delta = k for squarefree
k = 1 (mod 4) and delta = 4k for squarefree k = 2, 3 (mod 4).  For
delta < 0 the class number is the exact count of reduced primitive
forms; for delta > 0 it is Dirichlet's formula

    h = sqrt(delta) * L(1, chi) / (2 * log eps)

with eps the fundamental unit, evaluated in floating point and rounded,
with a loud consistency check.  All logarithms are natural.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

import mpmath as mp
import numpy as np

from .intutil import PreconditionError, crt, egcd, is_squarefree, squarefree_part

__all__ = [
    "FundamentalDiscriminant",
    "ReducedQuadraticForm",
    "ClassGroupDescription",
    "PellUnit",
    "kronecker",
    "fundamental_discriminant",
    "is_fundamental_discriminant",
    "reduced_forms",
    "form_automorphism_count",
    "class_number",
    "class_group",
    "three_part",
    "fundamental_unit",
    "dirichlet_L1",
    "louboutin_bound",
    "louboutin_constant",
    "le_bound",
    "solve_threshold",
]

ROUNDING_TOLERANCE = 1e-4
_DESK_DISC_LIMIT = 10**6


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a | n), the quadratic character attached to a."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    k = 1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v % 2 and a % 8 in (3, 5):
        k = -k
    if n < 0:
        n = -n
        if a < 0:
            k = -k
    # n odd positive from here; quadratic reciprocity loop
    a %= n
    while a:
        v = 0
        while a % 2 == 0:
            a //= 2
            v += 1
        if v % 2 and n % 8 in (3, 5):
            k = -k
        if a % 4 == 3 and n % 4 == 3:
            k = -k
        a, n = n % a, a
    return k if n == 1 else 0


@dataclass(frozen=True)
class FundamentalDiscriminant:
    """Squarefree k together with the discriminant of Q(sqrt(k))."""

    k: int
    delta: int


def fundamental_discriminant(k: int) -> FundamentalDiscriminant:
    """delta = k when k = 1 (mod 4), else 4k; k must be squarefree."""
    if k == 0:
        raise PreconditionError("k must be nonzero")
    if k == 1:
        raise PreconditionError("k = 1 gives the rational field, not a quadratic one")
    if not is_squarefree(k):
        raise PreconditionError(
            f"{k} is not squarefree; its squarefree part is {squarefree_part(k)}"
        )
    delta = k if k % 4 == 1 else 4 * k
    return FundamentalDiscriminant(k, delta)


def is_fundamental_discriminant(delta: int) -> bool:
    if delta == 0 or delta == 1:
        return False
    if delta % 4 == 1:
        return is_squarefree(delta)
    if delta % 4 == 0:
        m = delta // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def _require_fundamental(delta: int):
    if not is_fundamental_discriminant(delta):
        raise PreconditionError(f"{delta} is not a fundamental discriminant")


class ReducedQuadraticForm:
    """Reduced positive form (A, B, C) of negative discriminant."""

    __slots__ = ("A", "B", "C")

    def __init__(self, A: int, B: int, C: int):
        self.A, self.B, self.C = A, B, C

    @property
    def delta(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.A, self.B, self.C)

    def __eq__(self, other):
        return isinstance(other, ReducedQuadraticForm) and self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return f"ReducedQuadraticForm{self.as_tuple()}"


def reduced_forms(delta: int) -> list[ReducedQuadraticForm]:
    """All reduced primitive forms of discriminant delta < 0.

    Reduction: |B| <= A <= C with B >= 0 when |B| = A or A = C.
    """
    if delta >= 0 or delta % 4 not in (0, 1):
        raise PreconditionError("need delta < 0 with delta = 0 or 1 (mod 4)")
    out = []
    for a in range(1, isqrt(-delta // 3) + 1):
        for b in range(-a, a + 1):
            num = b * b - delta
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if (abs(b) == a or a == c) and b < 0:
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            out.append(ReducedQuadraticForm(a, b, c))
    return out


def form_automorphism_count(delta: int) -> int:
    """w: 6 for delta = -3, 4 for delta = -4, else 2 (delta < 0)."""
    if delta >= 0:
        raise PreconditionError("w is defined here for negative discriminants")
    return 6 if delta == -3 else 4 if delta == -4 else 2


# ---------------------------------------------------------------- characters


@lru_cache(maxsize=128)
def _character_values(delta: int) -> tuple[int, ...]:
    """chi_delta(a) for a = 0 .. |delta|-1, filled multiplicatively."""
    m = abs(delta)
    chi = [0] * m
    if m == 1:
        return (1,)
    chi[1] = 1
    spf = list(range(m))
    for p in range(2, isqrt(m) + 1):
        if spf[p] == p:
            for q in range(p * p, m, p):
                if spf[q] == q:
                    spf[q] = p
    for a in range(2, m):
        p = spf[a]
        chi[a] = kronecker(delta, p) * chi[a // p] if spf[a] != a else kronecker(delta, a)
    return tuple(chi)


def dirichlet_L1(delta: int, dps: int = 30) -> mp.mpf:
    """L(1, chi_delta) by the exact finite character sums.

    delta < 0:  L = pi * S / |delta|^(3/2), S = -sum chi(a) a
    delta > 0:  L = -(1/sqrt(delta)) * sum chi(a) log sin(pi a / delta)

    Relative accuracy 1e-12 at the default working precision.
    """
    _require_fundamental(delta)
    chi = _character_values(delta)
    m = abs(delta)
    with mp.workdps(dps):
        if delta < 0:
            s = -sum(chi[a] * a for a in range(1, m))
            val = mp.pi * s / mp.power(m, mp.mpf(3) / 2)
        else:
            acc = mp.mpf(0)
            for a in range(1, m):
                if chi[a]:
                    acc += chi[a] * mp.log(mp.sin(mp.pi * a / m))
            val = -acc / mp.sqrt(m)
        if val <= 0:
            raise PreconditionError("L(1, chi) came out nonpositive; precision failure")
        return +val


def _l1_real_float(delta: int) -> float:
    """float64 log-sine character sum; error ~ |delta| * 1e-16, plenty for
    the 1e-4 class-number rounding tolerance at desk scale."""
    chi = np.array(_character_values(delta), dtype=np.float64)
    a = np.arange(abs(delta), dtype=np.float64)
    mask = chi != 0.0
    return float(-(chi[mask] * np.log(np.sin(np.pi * a[mask] / abs(delta)))).sum() / np.sqrt(abs(delta)))


# ---------------------------------------------------------------- units


@dataclass(frozen=True)
class PellUnit:
    """(x + y sqrt(delta)) / 2 with x^2 - delta y^2 = 4 * norm_sign."""

    x: int
    y: int
    norm_sign: int
    delta: int

    def __post_init__(self):
        if self.x * self.x - self.delta * self.y * self.y != 4 * self.norm_sign:
            raise PreconditionError("Pell identity violated")

    def log_value(self, dps: int = 30) -> mp.mpf:
        with mp.workdps(dps):
            return +mp.log((mp.mpf(self.x) + mp.mpf(self.y) * mp.sqrt(self.delta)) / 2)


def _pell_minimal(n: int) -> tuple[int, int, int]:
    """Minimal (x, y, sign) with x^2 - n y^2 = sign in {-1, +1}, x, y > 0,
    from the continued fraction of sqrt(n); n a positive nonsquare."""
    a0 = isqrt(n)
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    pp, qq, a = 0, 1, a0
    i = 0
    while True:
        i += 1
        pp = a * qq - pp
        qq = (n - pp * pp) // qq
        a = (a0 + pp) // qq
        if qq == 1:
            return p, q, (-1) ** i
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q


def fundamental_unit(delta: int) -> PellUnit:
    """The minimal unit > 1 of the order of discriminant delta > 0.

    Uses the continued fraction of sqrt(.) to solve x^2 - n y^2 = +-1 and,
    for odd delta, takes the exact cube root inside Z[(1+sqrt(delta))/2]
    when the half-integral unit is smaller.
    """
    _require_fundamental(delta)
    if delta < 0:
        raise PreconditionError("units need delta > 0")
    if delta % 4 == 0:
        x, y, s = _pell_minimal(delta // 4)
        return PellUnit(2 * x, y, s, delta)
    x, y, s = _pell_minimal(delta)
    # (X + Y sqrt(delta)) may be eps^3 for eps = (u + v sqrt(delta))/2:
    # trace(eps^3) = u^3 - 3 n u with n = norm(eps) = s, y-part (u^2 - n) v / 2
    target = 2 * x
    u = _integer_cubic_root(target, s)
    if u is not None:
        den = u * u - s
        if den and (2 * y) % den == 0:
            v = 2 * y // den
            if u * u - delta * v * v == 4 * s:
                return PellUnit(u, v, s, delta)
    return PellUnit(2 * x, 2 * y, s, delta)


def _integer_cubic_root(target: int, n: int):
    """Positive integer u with u^3 - 3 n u = target, if one exists."""
    from .intutil import icbrt

    seed = icbrt(target) if target > 0 else 1
    for u in range(max(1, seed - 2), seed + 3):
        if u**3 - 3 * n * u == target:
            return u
    return None


# ---------------------------------------------------------------- class numbers


def class_number(delta: int) -> int:
    """h(delta): reduced-form count for delta < 0, analytic for delta > 0."""
    _require_fundamental(delta)
    if delta < 0:
        return len(reduced_forms(delta))
    unit = fundamental_unit(delta)
    l1 = _l1_real_float(delta)
    with mp.workdps(30):
        h = mp.sqrt(delta) * l1 / (2 * unit.log_value())
        rounded = int(mp.nint(h))
        if abs(h - rounded) > ROUNDING_TOLERANCE:
            # escalate once before declaring a precision failure
            l1_hp = dirichlet_L1(delta, dps=60)
            with mp.workdps(60):
                h = mp.sqrt(delta) * l1_hp / (2 * unit.log_value(dps=60))
                rounded = int(mp.nint(h))
                if abs(h - rounded) > ROUNDING_TOLERANCE:
                    raise PreconditionError(
                        f"analytic class number {h} is not within {ROUNDING_TOLERANCE} of an integer"
                    )
    if rounded < 1:
        raise PreconditionError("class number must be positive; precision failure")
    return rounded


def analytic_class_number_imaginary(delta: int) -> int:
    """h(delta) for delta < 0 from the exact character sum
    h = w * S / (2 |delta|), S = -sum chi(a) a; integer arithmetic."""
    _require_fundamental(delta)
    if delta > 0:
        raise PreconditionError("imaginary side only")
    chi = _character_values(delta)
    s = -sum(chi[a] * a for a in range(1, abs(delta)))
    w = form_automorphism_count(delta)
    num = w * s
    if num % (2 * abs(delta)):
        raise PreconditionError("character sum not divisible as expected")
    return num // (2 * abs(delta))


# ---------------------------------------------------------------- class group


@dataclass(frozen=True)
class ClassGroupDescription:
    """order and invariant factors d1 | d2 | ... (largest first)."""

    order: int
    elementary_divisors: tuple[int, ...]

    def __post_init__(self):
        prod = 1
        for d in self.elementary_divisors:
            prod *= d
        if prod != self.order:
            raise PreconditionError("divisors do not multiply to the order")


def _principal_form(delta: int) -> ReducedQuadraticForm:
    b = delta % 2
    return ReducedQuadraticForm(1, b, (b * b - delta) // 4)


def _reduce(a: int, b: int, c: int) -> ReducedQuadraticForm:
    while not (abs(b) <= a <= c):
        if c < a:
            a, b, c = c, -b, a
        else:
            r = (a - b) // (2 * a)
            b, c = b + 2 * r * a, a * r * r + b * r + c
    if (abs(b) == a or a == c) and b < 0:
        b = -b
    return ReducedQuadraticForm(a, b, c)


def _coprime_representative(f: ReducedQuadraticForm, m: int) -> tuple[int, int, int]:
    """Form SL2-equivalent to f whose leading coefficient is coprime to m."""
    a, b, c = f.as_tuple()
    if gcd(a, m) == 1:
        return a, b, c
    for n in range(1, 64):
        for x in range(-n, n + 1):
            for y in range(-n, n + 1):
                if max(abs(x), abs(y)) != n or gcd(x, y) != 1:
                    continue
                v = a * x * x + b * x * y + c * y * y
                if gcd(v, m) != 1:
                    continue
                g, p, q = egcd(x, y)
                if g < 0:
                    p, q = -p, -q
                u, w = -q, p  # [[x, u], [y, w]] has determinant +1
                return (
                    v,
                    2 * (a * x * u + c * y * w) + b * (x * w + y * u),
                    a * u * u + b * u * w + c * w * w,
                )
    raise PreconditionError("no coprime representative found (non-primitive form?)")


def compose(f1: ReducedQuadraticForm, f2: ReducedQuadraticForm) -> ReducedQuadraticForm:
    """Dirichlet composition through concordant representatives."""
    delta = f1.delta
    if delta != f2.delta:
        raise PreconditionError("forms must share a discriminant")
    a1, b1, c1 = f1.as_tuple()
    a2, b2, c2 = _coprime_representative(f2, 2 * f1.A)
    b = crt(b1, 2 * a1, b2, 2 * a2)
    a = a1 * a2
    if (b * b - delta) % (4 * a):
        raise PreconditionError("composition produced a non-integral form")
    return _reduce(a, b, (b * b - delta) // (4 * a))


def class_group(delta: int) -> ClassGroupDescription:
    """Structure of the form class group for fundamental delta < 0.

    Builds element orders under Dirichlet composition and reads off the
    invariant factors from the Sylow subgroup filtrations.
    """
    _require_fundamental(delta)
    if delta > 0:
        raise PreconditionError("class_group implemented for imaginary fields only")
    if -delta > _DESK_DISC_LIMIT:
        raise PreconditionError(f"|delta| > {_DESK_DISC_LIMIT}: beyond the desk-scale guard")
    forms = reduced_forms(delta)
    ident = _principal_form(delta)
    h = len(forms)
    orders = []
    for f in forms:
        o, g = 1, f
        while g != ident:
            g = compose(g, f)
            o += 1
        orders.append(o)
    # per-prime partitions from the counts of elements killed by p^i
    from .intutil import factorize

    primes = [p for p, _ in factorize(h).factors] if h > 1 else []
    partitions: dict[int, list[int]] = {}
    for p in primes:
        counts = [1]  # N_i = #{g : g^(p^i) = id}
        i = 0
        while True:
            i += 1
            n_i = sum(1 for o in orders if (p**i) % o == 0)
            if n_i == counts[-1]:
                break
            counts.append(n_i)
        logs = [_ilog(c, p) for c in counts]
        # parts[i] = number of cyclic p-factors of order >= p^(i+1)
        parts = [logs[i + 1] - logs[i] for i in range(len(logs) - 1)]
        exps = []
        j = 0
        while True:
            e = sum(1 for cnt in parts if cnt > j)
            if e == 0:
                break
            exps.append(e)
            j += 1
        # exps lists, per cyclic factor, its exponent (descending)
        partitions[p] = [p**e for e in exps]
    width = max((len(v) for v in partitions.values()), default=0)
    divisors = []
    for i in range(width):
        d = 1
        for p in primes:
            parts = partitions[p]
            if i < len(parts):
                d *= parts[i]
        divisors.append(d)
    group = ClassGroupDescription(h, tuple(divisors))
    return group


def _ilog(n: int, p: int) -> int:
    e = 0
    while n > 1:
        if n % p:
            raise PreconditionError("subgroup count is not a prime power")
        n //= p
        e += 1
    return e


def three_part(delta: int) -> int:
    """Size of the Sylow 3-subgroup of the class group (delta < 0)."""
    group = class_group(delta)
    out = 1
    for d in group.elementary_divisors:
        while d % 3 == 0:
            d //= 3
            out *= 3
    return out


# ---------------------------------------------------------------- bounds


@lru_cache(maxsize=4)
def louboutin_constant(parity: str) -> float:
    """c = (2 + gamma - log(4 pi))/2 for even characters,
    (2 + gamma - log pi)/2 for odd ones."""
    with mp.workdps(30):
        if parity == "even":
            return float((2 + mp.euler - mp.log(4 * mp.pi)) / 2)
        if parity == "odd":
            return float((2 + mp.euler - mp.log(mp.pi)) / 2)
    raise PreconditionError("parity must be 'even' or 'odd'")


def louboutin_bound(q: int, parity: str) -> float:
    """|L(1, chi)| <= 0.5 log q + c for characters of modulus q >= 3."""
    if q < 3:
        raise PreconditionError("modulus must be >= 3")
    return 0.5 * float(mp.log(q)) + louboutin_constant(parity)


def le_bound(delta: int) -> int:
    """Le's bound floor(sqrt(delta)/2) on h for real fields."""
    if delta <= 0:
        raise PreconditionError("need delta > 0")
    return isqrt(delta) // 2


def solve_threshold(kind: str) -> int:
    """Largest |k| satisfying the bound crossing inequality.

    real:      |k| <= 10 (sqrt|k| + 1)                        -> 119
    imaginary: |k| <= 10 (sqrt|k|/pi (0.5 log|k| + c_odd) + 1) -> 116

    found by a descending integer scan from above the crossover.
    """
    import math

    c = louboutin_constant("odd")
    if kind == "real":
        cond = lambda k: k <= 10 * (math.sqrt(k) + 1)
    elif kind == "imaginary":
        cond = lambda k: k <= 10 * (math.sqrt(k) / math.pi * (0.5 * math.log(k) + c) + 1)
    else:
        raise PreconditionError("kind must be 'real' or 'imaginary'")
    k = 10**4
    while k > 0 and not cond(k):
        k -= 1
    return k
