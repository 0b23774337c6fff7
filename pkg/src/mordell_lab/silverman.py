"""Cubic forms attached to rational points of y^2 = x^3 + D.

A rational point P = (s, t) with s t != 0 yields the form

    F(x, y) = x^3 - 3 s x^2 y - 4 D y^3

of discriminant -432 D t^2, with covariants

    H = 9 (s^2 x^2 + 4 D x y - 4 s D y^2)
    G = 54 ((s^3 + 2D) x^3 - 6 s D x^2 y + 12 s^2 D x y^2 + 8 D^2 y^3)

satisfying (4G)^2 = (4H)^3 + (432 t)^2 D F^2.  Projective points of the
curve F(x, y) = z^3 / (2t) map to zy^2 = x^3 + D z^3 through
[x, y, z] -> [z H/9, G/54, z^3].  All arithmetic is exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cubic import (
    BinaryCubicForm,
    covariant_g,
    discriminant,
    hessian,
    poly_add,
    poly_pow,
    poly_scale,
)
from .intutil import PreconditionError, is_perfect_square

__all__ = [
    "RationalPoint",
    "SilvermanForm",
    "build_form",
    "silverman_covariants",
    "check_scaled_syzygy",
    "covariant_point_map",
    "scaled_form",
    "lower_bound_exponent",
    "elkies_pair",
    "rational_points",
    "ELKIES_B",
]

ELKIES_B = -908800736629952526116772283648363  # rank-17 pair y^2 = x^3 - b, x^3 - 27b


@dataclass(frozen=True)
class RationalPoint:
    """Exact rational (s, t) with t^2 = s^3 + D for the owning D; s t != 0."""

    s: Fraction
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "t", Fraction(self.t))
        if self.s == 0 or self.t == 0:
            raise PreconditionError("need s t != 0")


@dataclass(frozen=True)
class SilvermanForm:
    """The point-built cubic form together with its source data."""

    D: int
    source: RationalPoint
    form: BinaryCubicForm


def build_form(d_coeff: int, point: RationalPoint) -> SilvermanForm:
    """Construct F = x^3 - 3 s x^2 y - 4 D y^3 and verify its discriminant."""
    if d_coeff == 0:
        raise PreconditionError("D must be nonzero")
    s, t = point.s, point.t
    if t * t != s**3 + d_coeff:
        raise PreconditionError(f"({s}, {t}) is not on y^2 = x^3 + {d_coeff}")
    form = BinaryCubicForm(Fraction(1), -s, Fraction(0), Fraction(-4 * d_coeff))
    disc = discriminant(form)
    if disc != -432 * d_coeff * t * t:
        raise PreconditionError("discriminant identity -432 D t^2 failed")
    return SilvermanForm(d_coeff, point, form)


def silverman_covariants(sf: SilvermanForm) -> tuple[list[Fraction], list[Fraction]]:
    """(H, G) as expanded coefficient vectors, from the displayed formulas.

    Cross-checked against the generic covariants: H = 9 * hessian(F) and
    G = 27 * covariant_g(F) coefficientwise.
    """
    s, d = sf.source.s, sf.D
    h = [9 * s * s, 36 * d, -36 * s * d]
    g = [
        54 * (s**3 + 2 * d),
        54 * -6 * s * d,
        54 * 12 * s * s * d,
        54 * 8 * d * d,
    ]
    assert h == poly_scale(hessian(sf.form).expanded(), 9)
    assert g == poly_scale(covariant_g(sf.form).expanded(), 27)
    return h, g


def check_scaled_syzygy(sf: SilvermanForm) -> bool:
    """(4G)^2 = (4H)^3 + (432 t)^2 D F^2 as an exact polynomial identity."""
    h, g = silverman_covariants(sf)
    f = sf.form.expanded()
    t = sf.source.t
    lhs = poly_pow(poly_scale(g, 4), 2)
    rhs = poly_add(poly_pow(poly_scale(h, 4), 3), poly_scale(poly_pow(f, 2), (432 * t) ** 2 * sf.D))
    return lhs == rhs


def covariant_point_map(
    sf: SilvermanForm, x: Fraction, y: Fraction, z: Fraction
) -> tuple[Fraction, Fraction, Fraction]:
    """[x, y, z] on F(x, y) = z^3/(2t)  ->  [z H/9, G/54, z^3].

    The image satisfies Z Y^2 = X^3 + D Z^3 exactly; a violated
    precondition is reported with the residual F(x, y) - z^3/(2t).
    """
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    t = sf.source.t
    residual = sf.form(x, y) - z**3 / (2 * t)
    if residual != 0:
        raise PreconditionError(f"point not on the cubic curve; residual {residual}")
    h_val = hessian(sf.form)(x, y)  # = H(x, y)/9
    g_val = covariant_g(sf.form)(x, y) / 2  # = G(x, y)/54
    big_x, big_y, big_z = z * h_val, g_val, z**3
    if big_z * big_y**2 != big_x**3 + sf.D * big_z**3:
        raise PreconditionError("image left the Mordell curve; arithmetic fault")
    return big_x, big_y, big_z


def scaled_form(d_coeff: int, point: RationalPoint) -> tuple[int, BinaryCubicForm, int]:
    """b = s2/gcd(3, s2) and F' = b F with integer expanded coefficients.

    Returns (b, F', disc(F')); disc(F') = b^4 * disc(F) = -432 b^4 t^2 D,
    an exact integer even when the binomial coefficients of F' are thirds.
    """
    sf = build_form(d_coeff, point)
    s2 = point.s.denominator
    b = s2 // gcd(3, s2)
    form = sf.form
    scaled = BinaryCubicForm(b * form.a, b * form.b, b * form.c, b * form.d)
    if any(Fraction(c).denominator != 1 for c in scaled.expanded()):
        raise PreconditionError("scaled form is not integral; scaling rule broken")
    disc = discriminant(scaled)
    if disc != Fraction(b) ** 4 * discriminant(form):
        raise PreconditionError("disc(bF) != b^4 disc(F)")
    if disc != -432 * b**4 * point.t**2 * d_coeff:
        raise PreconditionError("disc(F') != -432 b^4 t^2 D")
    if Fraction(disc).denominator != 1:
        raise PreconditionError("integral form with non-integral discriminant")
    return b, scaled, int(disc)


def lower_bound_exponent(rank: int) -> Fraction:
    """The exponent r/(r+2) in the representation-count lower bound."""
    if rank < 1:
        raise PreconditionError("rank must be >= 1")
    return Fraction(rank, rank + 2)


def elkies_pair():
    """The stored high-rank constant b and the curve pair y^2 = x^3 - b,
    y^2 = x^3 - 27b; no rank computation is performed."""
    from .search import MordellCurve

    return ELKIES_B, MordellCurve(-ELKIES_B), MordellCurve(-27 * ELKIES_B)


def rational_points(d_coeff: int, denom_max: int = 6, num_max: int = 400) -> list[RationalPoint]:
    """Small-height rational points on y^2 = x^3 + D with s t != 0.

    Points have s = p / e^2, t = r / e^3; the search scans e <= denom_max
    and |p| <= num_max and returns the t > 0 representative of each x.
    """
    if d_coeff == 0:
        raise PreconditionError("D must be nonzero")
    out = []
    for e in range(1, denom_max + 1):
        e2 = e * e
        for p in range(-num_max, num_max + 1):
            if p == 0 or gcd(p, e) != 1:
                continue
            t2_num = p**3 + d_coeff * e**6
            if t2_num <= 0:
                continue
            r = is_perfect_square(t2_num)
            if r is None or r == 0:
                continue
            out.append(RationalPoint(Fraction(p, e2), Fraction(r, e**3)))
    return out
