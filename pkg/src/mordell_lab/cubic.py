"""Binary cubic forms F = a x^3 + 3b x^2 y + 3c x y^2 + d y^3.

Coefficients are stored in the binomial convention (a, b, c, d); the
expanded integer coefficients are (a, 3b, 3c, d).  The Hessian H, the
Jacobian covariant G and the discriminant satisfy the classical syzygy

    4 H^3 = G^2 + 27 D F^2

which this module checks by exact polynomial expansion.  Unit values
F(x0, y0) = 1 of forms with discriminant -108k map to integral points of
y^2 = x^3 + k via the covariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import NamedTuple

from .intutil import PreconditionError
from .search import IntegralPoint

__all__ = [
    "BinaryCubicForm",
    "QuadraticCovariant",
    "CubicCovariant",
    "UnimodularMatrix",
    "discriminant",
    "hessian",
    "covariant_g",
    "check_syzygy",
    "to_mordell",
    "act",
    "count_form_classes",
    "bennett_point_bound",
    "count_representations",
]

Coeff = int | Fraction


# ---------------------------------------------------------------- poly ops
# dense coefficient lists for homogeneous binary forms:
# [c0, c1, ..., cn] stands for sum c_i x^(n-i) y^i


def poly_mul(u: list, v: list) -> list:
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            out[i + j] += a * b
    return out


def poly_pow(u: list, k: int) -> list:
    out = [1]
    for _ in range(k):
        out = poly_mul(out, u)
    return out


def poly_scale(u: list, s) -> list:
    return [s * a for a in u]


def poly_add(u: list, v: list) -> list:
    n = max(len(u), len(v))
    u = u + [0] * (n - len(u))
    v = v + [0] * (n - len(v))
    return [a + b for a, b in zip(u, v)]


def poly_eval(u: list, x, y):
    n = len(u) - 1
    return sum(c * x ** (n - i) * y**i for i, c in enumerate(u))


# ---------------------------------------------------------------- types


@dataclass(frozen=True)
class BinaryCubicForm:
    """Binomial coefficients of a x^3 + 3b x^2 y + 3c x y^2 + d y^3."""

    a: Coeff
    b: Coeff
    c: Coeff
    d: Coeff

    def expanded(self) -> list:
        return [self.a, 3 * self.b, 3 * self.c, self.d]

    def __call__(self, x, y):
        return poly_eval(self.expanded(), x, y)


class QuadraticCovariant(NamedTuple):
    """H/9 = p x^2 + q xy + r y^2."""

    p: Coeff
    q: Coeff
    r: Coeff

    def expanded(self) -> list:
        return [self.p, self.q, self.r]

    def __call__(self, x, y):
        return poly_eval(self.expanded(), x, y)


class CubicCovariant(NamedTuple):
    """G/27 in binomial convention (a1, b1, c1, d1)."""

    a1: Coeff
    b1: Coeff
    c1: Coeff
    d1: Coeff

    def expanded(self) -> list:
        return [self.a1, 3 * self.b1, 3 * self.c1, self.d1]

    def __call__(self, x, y):
        return poly_eval(self.expanded(), x, y)


@dataclass(frozen=True)
class UnimodularMatrix:
    """Integer matrix [[p, q], [r, s]] with determinant +-1."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.p * self.s - self.q * self.r not in (-1, 1):
            raise PreconditionError("matrix is not unimodular")

    @property
    def det(self) -> int:
        return self.p * self.s - self.q * self.r


# ---------------------------------------------------------------- covariants


def discriminant(form: BinaryCubicForm):
    """D_F = -27 (a^2 d^2 - 6abcd - 3 b^2 c^2 + 4 a c^3 + 4 b^3 d)."""
    a, b, c, d = form.a, form.b, form.c, form.d
    return -27 * (a * a * d * d - 6 * a * b * c * d - 3 * b * b * c * c + 4 * a * c**3 + 4 * b**3 * d)


def hessian(form: BinaryCubicForm) -> QuadraticCovariant:
    """H/9 = (b^2 - ac) x^2 + (bc - ad) xy + (c^2 - bd) y^2."""
    a, b, c, d = form.a, form.b, form.c, form.d
    return QuadraticCovariant(b * b - a * c, b * c - a * d, c * c - b * d)


def covariant_g(form: BinaryCubicForm) -> CubicCovariant:
    """G/27 with a1 = -a^2 d + 3abc - 2b^3 and its companions."""
    a, b, c, d = form.a, form.b, form.c, form.d
    return CubicCovariant(
        -a * a * d + 3 * a * b * c - 2 * b**3,
        -b * b * c - a * b * d + 2 * a * c * c,
        b * c * c - 2 * b * b * d + a * c * d,
        -3 * b * c * d + 2 * c**3 + a * d * d,
    )


def check_syzygy(form: BinaryCubicForm) -> bool:
    """Verify 4 H^3 = G^2 + 27 D F^2 coefficientwise, exactly."""
    f = form.expanded()
    h = poly_scale(hessian(form).expanded(), 9)
    g = poly_scale(covariant_g(form).expanded(), 27)
    d = discriminant(form)
    lhs = poly_scale(poly_pow(h, 3), 4)
    rhs = poly_add(poly_pow(g, 2), poly_scale(poly_pow(f, 2), 27 * d))
    return lhs == rhs


def to_mordell(form: BinaryCubicForm, x0: int, y0: int) -> tuple[int, int, int]:
    """Map a unit value of the form to a Mordell point.

    Requires F(x0, y0) = 1 and 108 | D; then with H1 = H/9, G1 = G/27,

        X = H1(x0, y0),  Y = G1(x0, y0) / 2,  k = -D/108,

    and Y^2 = X^3 + k exactly.
    """
    value = form(x0, y0)
    if value != 1:
        raise PreconditionError(f"F(x0, y0) = {value}, need the unit value 1")
    d = discriminant(form)
    if d % 108:
        raise PreconditionError(f"discriminant {d} not divisible by 108: k would not be integral")
    x = hessian(form)(x0, y0)
    g1 = covariant_g(form)(x0, y0)
    if g1 % 2:
        raise PreconditionError("G/27 value is odd; covariant parity broken")
    y = g1 // 2
    k = -d // 108
    assert y * y == x**3 + k
    return x, y, k


def act(form: BinaryCubicForm, mat: UnimodularMatrix) -> BinaryCubicForm:
    """The substituted form F(px + qy, rx + sy), still binomial.

    The binomial-coefficient lattice is stable under GL2(Z), so the
    divisions by 3 are exact; the discriminant is unchanged.
    """
    row1 = [mat.p, mat.q]
    row2 = [mat.r, mat.s]
    coeffs = form.expanded()
    out = [0, 0, 0, 0]
    for i, c in enumerate(coeffs):
        term = poly_scale(poly_mul(poly_pow(row1, 3 - i), poly_pow(row2, i)), c)
        out = poly_add(out, term)
    if out[1] % 3 or out[2] % 3:
        raise PreconditionError("transformed form left the binomial lattice")
    return BinaryCubicForm(out[0], out[1] // 3, out[2] // 3, out[3])


# ---------------------------------------------------------------- class counting


def unimodular_matrices(entry_bound: int) -> list[UnimodularMatrix]:
    """All matrices with entries in [-entry_bound, entry_bound] and det +-1."""
    if entry_bound < 1:
        raise PreconditionError("entry bound must be >= 1")
    rng = range(-entry_bound, entry_bound + 1)
    out = []
    for p, q, r, s in product(rng, repeat=4):
        if p * s - q * r in (-1, 1):
            out.append(UnimodularMatrix(p, q, r, s))
    return out


def count_form_classes(k: int, coeff_box: int, matrix_box: int) -> int:
    """Experimental class count for forms of discriminant -108k.

    Enumerates binomial forms with |a|,|b|,|c|,|d| <= coeff_box, merges
    classes by exhaustive unimodular action with entries <= matrix_box,
    and returns the number of classes found.  Box enumeration cannot
    certify completeness, so treat this as a lower approximation of the
    cubic class number h3(-108k).
    """
    if k == 0:
        raise PreconditionError("k must be nonzero")
    if coeff_box < 1 or matrix_box < 1:
        raise PreconditionError("boxes must be >= 1")
    target = -108 * k
    rng = range(-coeff_box, coeff_box + 1)
    forms = [
        BinaryCubicForm(a, b, c, d)
        for a, b, c, d in product(rng, repeat=4)
        if discriminant(BinaryCubicForm(a, b, c, d)) == target
    ]
    index = {(f.a, f.b, f.c, f.d): i for i, f in enumerate(forms)}
    parent = list(range(len(forms)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    mats = unimodular_matrices(matrix_box)
    for i, f in enumerate(forms):
        for m in mats:
            g = act(f, m)
            j = index.get((g.a, g.b, g.c, g.d))
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    return len({find(i) for i in range(len(forms))})


def bennett_point_bound(h3: int) -> int:
    """Bennett's bound: at most 10 * h3 integral points for the matching k."""
    if h3 < 0:
        raise PreconditionError("h3 must be >= 0")
    return 10 * h3


def count_representations(expanded: list, m: int, box: int) -> int:
    """Solutions of F(x, y) = m with |x|, |y| <= box, coprime (x, y).

    Brute-force counting used to sanity-check point bounds; expanded is
    the full coefficient list of any homogeneous binary form.
    """
    count = 0
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            if gcd(x, y) != 1:
                continue
            if poly_eval(expanded, x, y) == m:
                count += 1
    return count


def mordell_points_from_forms(k: int, coeff_box: int, unit_box: int) -> list[IntegralPoint]:
    """Every Mordell point reachable from box forms of discriminant -108k
    through unit values |x0|, |y0| <= unit_box; deduplicated."""
    target = -108 * k
    rng = range(-coeff_box, coeff_box + 1)
    pts = set()
    for a, b, c, d in product(rng, repeat=4):
        form = BinaryCubicForm(a, b, c, d)
        if discriminant(form) != target:
            continue
        for x0 in range(-unit_box, unit_box + 1):
            for y0 in range(-unit_box, unit_box + 1):
                if form(x0, y0) == 1:
                    x, y, kk = to_mordell(form, x0, y0)
                    assert kk == k
                    pts.add(IntegralPoint(x, y))
    return sorted(pts)
