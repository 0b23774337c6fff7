"""AGM machinery, complete elliptic integrals and real periods.

For 0 < lam < 1 the Legendre curve y^2 = x(x-1)(x-lam) has real period

    Omega(lam) = pi * 2F1(1/2, 1/2; 1; lam) = pi / AGM(1, sqrt(1-lam))

and for a monic cubic with real roots e1 < e2 < e3 the curve
y^2 = (x-e1)(x-e2)(x-e3) has

    Omega = 2 pi / AGM(sqrt(e3-e1), sqrt(e3-e2)),

so Omega(roots=(0, lam, 1)) = 2 * Omega(lam); the factor 2 is the usual
monic-versus-4(x-a)(x-b)(x-c) bookkeeping, pinned down numerically by
the quadrature cross-checks in the test suite.

The bound evaluators at the bottom combine the period with the explicit
L(1, chi) constant; `zhang_k_bound` is kept exactly as the source
inequality is printed even though the comparison K(r) < zhang_k_bound(r)
fails numerically on (0, 1) (see the recorded bound-inequality tests).
All logarithms are natural.
"""

from __future__ import annotations

import mpmath as mp

from .classfield import louboutin_constant
from .intutil import PreconditionError

__all__ = [
    "set_precision",
    "get_precision",
    "agm",
    "elliptic_K",
    "gauss_2f1_half",
    "real_period_lambda",
    "real_period_roots",
    "log_mean",
    "twist_bound_logmean",
    "twist_bound_alzer",
    "twist_bound_zhang",
    "alzer_k_bound",
    "zhang_k_bound",
]

_PRECISION_BITS = 120


def set_precision(bits: int):
    """Working mantissa for every routine in this module (>= 64 bits)."""
    global _PRECISION_BITS
    if bits < 64:
        raise PreconditionError("precision must be at least 64 bits")
    _PRECISION_BITS = bits


def get_precision() -> int:
    return _PRECISION_BITS


def _wp():
    return mp.workprec(_PRECISION_BITS + 10)


def agm(a, b, rel_tol: float = 1e-20) -> mp.mpf:
    """Arithmetic-geometric mean of a, b > 0.

    Iterates until |a_n - b_n| <= rel_tol * a_n, then performs one extra
    iteration; quadratic convergence makes the tail negligible.
    """
    if not 0 < rel_tol <= 1e-4:
        raise PreconditionError("rel_tol must lie in (0, 1e-4]")
    with _wp():
        x, y = mp.mpf(a), mp.mpf(b)
        if x <= 0 or y <= 0:
            raise PreconditionError("agm needs positive arguments")
        while abs(x - y) > rel_tol * x:
            x, y = (x + y) / 2, mp.sqrt(x * y)
        x, y = (x + y) / 2, mp.sqrt(x * y)
        return +((x + y) / 2)


def elliptic_K(r) -> mp.mpf:
    """K(r) = pi / (2 AGM(1, sqrt(1 - r^2))) for modulus 0 <= r < 1."""
    with _wp():
        r = mp.mpf(r)
        if not 0 <= r < 1:
            raise PreconditionError("modulus must satisfy 0 <= r < 1")
        return +(mp.pi / (2 * agm(1, mp.sqrt(1 - r * r))))


def gauss_2f1_half(lam) -> mp.mpf:
    """2F1(1/2, 1/2; 1; lam) = sum ((1/2)_n / n!)^2 lam^n, 0 < lam < 1.

    Summed to relative 1e-12 (tighter under higher working precision).
    """
    with _wp():
        lam = mp.mpf(lam)
        if not 0 < lam < 1:
            raise PreconditionError("lambda must lie in (0, 1)")
        total = mp.mpf(1)
        term = mp.mpf(1)
        n = 0
        stop = mp.mpf(10) ** -15
        while True:
            ratio = ((n + mp.mpf(1) / 2) / (n + 1)) ** 2 * lam
            term *= ratio
            total += term
            n += 1
            if term < stop * total:
                return +total


def real_period_lambda(lam) -> mp.mpf:
    """Omega(lam) = pi / AGM(1, sqrt(1 - lam)) = 2 K(sqrt(lam))."""
    with _wp():
        lam = mp.mpf(lam)
        if not 0 < lam < 1:
            raise PreconditionError("lambda must lie in (0, 1)")
        return +(mp.pi / agm(1, mp.sqrt(1 - lam)))


def real_period_roots(e1, e2, e3) -> mp.mpf:
    """Real period of monic y^2 = (x-e1)(x-e2)(x-e3), e1 < e2 < e3:
    2 pi / AGM(sqrt(e3-e1), sqrt(e3-e2))."""
    with _wp():
        e1, e2, e3 = mp.mpf(e1), mp.mpf(e2), mp.mpf(e3)
        if not e1 < e2 < e3:
            raise PreconditionError("roots must be strictly ordered e1 < e2 < e3")
        return +(2 * mp.pi / agm(mp.sqrt(e3 - e1), mp.sqrt(e3 - e2)))


def log_mean(a, b) -> mp.mpf:
    """L(a, b) = (b - a) / (log b - log a); L(a, a) = a by continuity."""
    with _wp():
        a, b = mp.mpf(a), mp.mpf(b)
        if a <= 0 or b <= 0:
            raise PreconditionError("log mean needs positive arguments")
        if a == b:
            return +a
        return +((b - a) / (mp.log(b) - mp.log(a)))


def _louboutin_term(disc_abs) -> mp.mpf:
    return mp.mpf("0.5") * mp.log(disc_abs) + louboutin_constant("odd")


def twist_bound_logmean(disc_abs, lam) -> mp.mpf:
    """(sqrt|D| - 1)(0.5 log|D| + c) / (4 L(1, sqrt(1 - lam)))."""
    with _wp():
        disc_abs, lam = mp.mpf(disc_abs), mp.mpf(lam)
        if disc_abs <= 1:
            raise PreconditionError("need |disc| > 1")
        if not 0 < lam < 1:
            raise PreconditionError("lambda must lie in (0, 1)")
        return +(
            (mp.sqrt(disc_abs) - 1) * _louboutin_term(disc_abs) / (4 * log_mean(1, mp.sqrt(1 - lam)))
        )


def twist_bound_alzer(disc_abs, lam) -> mp.mpf:
    """(sqrt|D| - 1)(0.5 log|D| + c)(5 - lam)/(8 pi) * log(4/sqrt(1-lam))."""
    with _wp():
        disc_abs, lam = mp.mpf(disc_abs), mp.mpf(lam)
        if disc_abs <= 1 or not 0 < lam < 1:
            raise PreconditionError("need |disc| > 1 and 0 < lambda < 1")
        return +(
            (mp.sqrt(disc_abs) - 1)
            * _louboutin_term(disc_abs)
            * (5 - lam)
            / (8 * mp.pi)
            * mp.log(4 / mp.sqrt(1 - lam))
        )


def twist_bound_zhang(disc_abs, lam) -> mp.mpf:
    """3 (sqrt|D| - 1)(0.5 log|D| + c) / (2 pi (lam + 3)) * log(4/sqrt(1-lam))."""
    with _wp():
        disc_abs, lam = mp.mpf(disc_abs), mp.mpf(lam)
        if disc_abs <= 1 or not 0 < lam < 1:
            raise PreconditionError("need |disc| > 1 and 0 < lambda < 1")
        return +(
            3
            * (mp.sqrt(disc_abs) - 1)
            * _louboutin_term(disc_abs)
            / (2 * mp.pi * (lam + 3))
            * mp.log(4 / mp.sqrt(1 - lam))
        )


def alzer_k_bound(r) -> mp.mpf:
    """Alzer's upper bound log(4/r')(1 + r'^2/4), r' = sqrt(1 - r^2)."""
    with _wp():
        r = mp.mpf(r)
        if not 0 < r < 1:
            raise PreconditionError("r must lie in (0, 1)")
        rp = mp.sqrt(1 - r * r)
        return +(mp.log(4 / rp) * (1 + rp * rp / 4))


def zhang_k_bound(r) -> mp.mpf:
    """The curve 3/(3 + r^2) * log(4/r'), transcribed verbatim.

    Numerically this sits BELOW K(r) throughout (0, 1): it behaves as a
    lower-bound-shaped companion to Alzer's upper bound, so any use as an
    upper bound for K fails; the tests record this.
    """
    with _wp():
        r = mp.mpf(r)
        if not 0 < r < 1:
            raise PreconditionError("r must lie in (0, 1)")
        rp = mp.sqrt(1 - r * r)
        return +(3 / (3 + r * r) * mp.log(4 / rp))
