"""Quadratic twists: integral point counts on the bounded component,
Duke-style partial sums, and binary quartic invariant machinery.

For E: y^2 = x^3 + Ax + B with disc > 0 and real roots e1 < e2 < e3, the
twist count nu(n) is the number of integral (x, y) on
y^2 = x^3 + A n^2 x + B n^3 with gcd(x, n) = 1 and e1 <= x/n <= e2.
Membership of x/n in [e1, e2] is decided exactly: the twisted cubic
value is >= 0 there, and the component is separated from e3 by the
critical point sqrt(-A/3), giving the integral test

    x^3 + A n^2 x + B n^3 >= 0   and   (x <= 0 or 3 x^2 <= -A n^2).

Counts are exact; float square roots only seed candidates inside the
proven int64-safe window.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, isqrt

import mpmath as mp
import numpy as np

from .intutil import PreconditionError, dedekind_psi, euler_phi, is_perfect_square
from .periods import real_period_roots

__all__ = [
    "WeierstrassCurve",
    "BinaryQuarticForm",
    "dedekind_psi",
    "euler_phi",
    "twist_point_count",
    "duke_partial_sum",
    "duke_rhs",
    "quartic_invariants",
    "quartic_syzygy_delta",
    "act_quartic",
    "quartic_automorphism_count",
    "hurwitz_quartic_count",
    "curve_lambda",
]


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 = x^3 + Ax + B with nonzero discriminant -16(4A^3 + 27B^2)."""

    A: int
    B: int

    def __post_init__(self):
        if self.disc == 0:
            raise PreconditionError("singular curve: discriminant is zero")

    @property
    def disc(self) -> int:
        return -16 * (4 * self.A**3 + 27 * self.B**2)

    def real_roots(self, dps: int = 40) -> tuple[mp.mpf, mp.mpf, mp.mpf]:
        """The three real roots of x^3 + Ax + B, ascending (disc > 0)."""
        if self.disc <= 0:
            raise PreconditionError("three real roots require disc > 0")
        with mp.workdps(dps):
            roots = mp.polyroots([1, 0, self.A, self.B], extraprec=60)
            roots = sorted(mp.re(r) for r in roots)
            return tuple(+r for r in roots)


def curve_lambda(curve: WeierstrassCurve) -> mp.mpf:
    """lambda = (e2 - e1) / (e3 - e1) in (0, 1) for disc > 0."""
    e1, e2, e3 = curve.real_roots()
    return (e2 - e1) / (e3 - e1)


def _twist_in_band(x: int, n: int, a: int, b: int) -> bool:
    v = x**3 + a * n * n * x + b * n**3
    return v >= 0 and (x <= 0 or 3 * x * x <= -a * n * n)


def twist_point_count(curve: WeierstrassCurve, n: int) -> int:
    """nu(n): both y signs counted, y = 0 once; exact."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if curve.disc <= 0:
        raise PreconditionError("twist counting needs disc > 0")
    a, b = curve.A, curve.B
    e1, e2, _ = curve.real_roots(dps=30)
    lo = int(mp.floor(n * e1)) - 2
    hi = int(mp.ceil(n * e2)) + 2
    vmax = max(abs(lo), abs(hi)) ** 3 + abs(a) * n * n * max(abs(lo), abs(hi)) + abs(b) * n**3
    if vmax < 2**62:
        return _count_int64(a, b, n, lo, hi)
    count = 0
    for x in range(lo, hi + 1):
        if gcd(x, n) != 1 or not _twist_in_band(x, n, a, b):
            continue
        r = is_perfect_square(x**3 + a * n * n * x + b * n**3)
        if r is not None:
            count += 1 if r == 0 else 2
    return count


def _count_int64(a: int, b: int, n: int, lo: int, hi: int) -> int:
    xs = np.arange(lo, hi + 1, dtype=np.int64)
    v = xs**3 + a * n * n * xs + b * n**3
    ok = (v >= 0) & ((xs <= 0) | (3 * xs * xs <= -a * n * n)) & (np.gcd(xs, n) == 1)
    v = v[ok]
    if not v.size:
        return 0
    r = np.sqrt(v.astype(np.float64)).astype(np.int64)
    count = 0
    seen = set()
    for cand in (r - 1, r, r + 1):
        sq = cand * cand == v
        for idx in np.nonzero(sq)[0]:
            if idx in seen:
                continue
            seen.add(int(idx))
            count += 1 if cand[idx] == 0 else 2
    return count


def duke_partial_sum(curve: WeierstrassCurve, n_max: int) -> float:
    """(1 / sqrt(N)) * sum_{n <= N} nu(n)."""
    if n_max < 1:
        raise PreconditionError("N must be >= 1")
    total = sum(twist_point_count(curve, n) for n in range(1, n_max + 1))
    return total / float(np.sqrt(n_max))


def duke_rhs(curve: WeierstrassCurve, h_e: Fraction | int) -> float:
    """3 * disc * Omega / (2 pi^2 psi(disc)) * h_E (disc > 0)."""
    if curve.disc <= 0:
        raise PreconditionError("needs disc > 0")
    if h_e < 0:
        raise PreconditionError("h_E must be >= 0")
    e1, e2, e3 = curve.real_roots()
    omega = real_period_roots(e1, e2, e3)
    disc = curve.disc
    return float(3 * disc * omega / (2 * mp.pi**2 * dedekind_psi(disc)) * mp.mpf(float(h_e)))


# ---------------------------------------------------------------- quartics


@dataclass(frozen=True)
class BinaryQuarticForm:
    """Binomial coefficients of a x^4 + 4b x^3 y + 6c x^2 y^2 + 4d x y^3 + e y^4."""

    a: int
    b: int
    c: int
    d: int
    e: int

    def expanded(self) -> list[int]:
        return [self.a, 4 * self.b, 6 * self.c, 4 * self.d, self.e]

    def content(self) -> int:
        return gcd(gcd(gcd(self.a, 4 * self.b), gcd(6 * self.c, 4 * self.d)), self.e)

    def __call__(self, x: int, y: int) -> int:
        a, b4, c6, d4, e = self.expanded()
        return a * x**4 + b4 * x**3 * y + c6 * x * x * y * y + d4 * x * y**3 + e * y**4


def quartic_invariants(form: BinaryQuarticForm) -> tuple[int, int]:
    """The classical SL2-invariants

        I = ae - 4bd + 3c^2
        J = ace + 2bcd - ad^2 - b^2 e - c^3

    (the 3c^2, 2bcd, ad^2 terms carry the standard coefficients that make
    invariance hold; invariance is property-tested).
    """
    a, b, c, d, e = form.a, form.b, form.c, form.d, form.e
    i_val = a * e - 4 * b * d + 3 * c * c
    j_val = a * c * e + 2 * b * c * d - a * d * d - b * b * e - c**3
    return i_val, j_val


def quartic_syzygy_delta(i_val: int, j_val: int) -> int:
    """Delta_F = I^3 - 27 J^2."""
    return i_val**3 - 27 * j_val * j_val


def act_quartic(form: BinaryQuarticForm, mat) -> BinaryQuarticForm:
    """Substituted form F(px + qy, rx + sy); binomial lattice is stable."""
    from .cubic import poly_add, poly_mul, poly_pow, poly_scale

    row1, row2 = [mat.p, mat.q], [mat.r, mat.s]
    out = [0] * 5
    for i, cf in enumerate(form.expanded()):
        out = poly_add(out, poly_scale(poly_mul(poly_pow(row1, 4 - i), poly_pow(row2, i)), cf))
    if out[1] % 4 or out[2] % 6 or out[3] % 4:
        raise PreconditionError("transformed quartic left the binomial lattice")
    return BinaryQuarticForm(out[0], out[1] // 4, out[2] // 6, out[3] // 4, out[4])


def _sturm_real_root_count(coeffs: list[int]) -> int:
    """Number of distinct real roots of the polynomial via Sturm chains."""

    def diff(p):
        n = len(p) - 1
        return [c * (n - i) for i, c in enumerate(p[:-1])]

    def rem(p, q):
        p = [Fraction(c) for c in p]
        q = [Fraction(c) for c in q]
        while len(p) >= len(q) and any(p):
            if p[0] == 0:
                p = p[1:]
                continue
            factor = p[0] / q[0]
            shift = len(p) - len(q)
            for i, qc in enumerate(q):
                p[i] -= factor * qc
            p = p[1:]
        while p and p[0] == 0:
            p = p[1:]
        return p

    def signs_at_inf(chain, sign):
        out = []
        for p in chain:
            if not p:
                continue
            lead = p[0]
            deg = len(p) - 1
            s = 1 if lead > 0 else -1
            out.append(s if sign > 0 else s * (-1) ** deg)
        changes = 0
        for x, y in zip(out, out[1:]):
            if x * y < 0:
                changes += 1
        return changes

    p = [Fraction(c) for c in coeffs]
    while p and p[0] == 0:
        p = p[1:]
    if len(p) <= 1:
        return 0
    chain = [p, [Fraction(c) for c in diff(p)]]
    while True:
        r = rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return signs_at_inf(chain, -1) - signs_at_inf(chain, +1)


def is_positive_definite(form: BinaryQuarticForm) -> bool:
    """F(x, y) > 0 for all real (x, y) != (0, 0)."""
    if form.a <= 0 or form.e <= 0:
        return False
    return _sturm_real_root_count(form.expanded()) == 0


def quartic_automorphism_count(form: BinaryQuarticForm, matrix_box: int) -> int:
    """#Aut F among SL2 matrices with entries <= matrix_box; +-identity
    always act trivially on a quartic, so the count is at least 2."""
    from .cubic import unimodular_matrices

    count = 0
    for m in unimodular_matrices(matrix_box):
        if m.det == 1 and act_quartic(form, m) == form:
            count += 1
    return count


def hurwitz_quartic_count(
    i0: int, j0: int, coeff_box: int, matrix_box: int
) -> Fraction:
    """Weighted class count sum 2/#Aut F over positive-definite forms with
    invariants (i0, j0) found in the coefficient box.

    Classes are merged by exhaustive SL2 action with bounded entries, so
    the result is an approximation: the box may miss classes entirely and
    bounded matrices may fail to merge equivalent forms.
    """
    if coeff_box < 1 or matrix_box < 1:
        raise PreconditionError("boxes must be >= 1")
    from .cubic import unimodular_matrices

    rng = range(-coeff_box, coeff_box + 1)
    forms = []
    for a, b, c, d, e in product(rng, repeat=5):
        form = BinaryQuarticForm(a, b, c, d, e)
        if quartic_invariants(form) != (i0, j0):
            continue
        if quartic_syzygy_delta(i0, j0) <= 0:
            continue
        if is_positive_definite(form):
            forms.append(form)
    if not forms:
        return Fraction(0)
    index = {f: i for i, f in enumerate(forms)}
    parent = list(range(len(forms)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    mats = [m for m in unimodular_matrices(matrix_box) if m.det == 1]
    for i, f in enumerate(forms):
        for m in mats:
            j = index.get(act_quartic(f, m))
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    total = Fraction(0)
    for rep in {find(i) for i in range(len(forms))}:
        aut = quartic_automorphism_count(forms[rep], matrix_box)
        total += Fraction(2, aut)
    return total
