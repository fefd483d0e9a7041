"""Resolvent-form machinery for index computations in monic quartic fields.

For f(x) = x^4 + a1 x^3 + a2 x^2 + a3 x + a4 with root xi of index n, an
element (a + x*xi + y*xi^2 + z*xi^3)/d of index m forces

    F(Q1(x,y,z), Q2(x,y,z)) = +- d^6 m / n

with the binary cubic F and ternary quadratics Q1, Q2 built below.  The
code is written for arbitrary monic quartics and specialised to the
family by `family_coeffs`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fieldmodel import FamilyParameter, v2
from .elements import PowerRep


class NotInRange(ValueError):
    pass


@dataclass(frozen=True)
class QuarticCoeffs:
    """Non-leading coefficients of a monic quartic x^4 + a1 x^3 + ... + a4."""

    a1: int
    a2: int
    a3: int
    a4: int


@dataclass(frozen=True)
class ResolventForm:
    """Binary cubic F(u, v); coefficients in (u^3, u^2 v, u v^2, v^3) order."""

    coeffs: tuple[int, int, int, int]

    def __call__(self, u: int, v: int) -> int:
        c = self.coeffs
        return ((c[0] * u + c[1] * v) * u + c[2] * v * v) * u + c[3] * v ** 3


@dataclass(frozen=True)
class TernaryForm:
    """Ternary quadratic; coefficients in (x^2, xy, y^2, xz, yz, z^2) order."""

    coeffs: tuple[int, int, int, int, int, int]

    def __call__(self, x: int, y: int, z: int) -> int:
        cxx, cxy, cyy, cxz, cyz, czz = self.coeffs
        return (cxx * x * x + cxy * x * y + cyy * y * y
                + cxz * x * z + cyz * y * z + czz * z * z)

    def scaled(self, c: int) -> "TernaryForm":
        return TernaryForm(tuple(c * e for e in self.coeffs))

    @staticmethod
    def combine(cv: int, q1: "TernaryForm", cu: int, q2: "TernaryForm") -> "TernaryForm":
        """cv*Q1 + cu*Q2 as a new form."""
        return TernaryForm(tuple(cv * e1 + cu * e2
                                 for e1, e2 in zip(q1.coeffs, q2.coeffs)))


def build_forms(c: QuarticCoeffs) -> tuple[ResolventForm, TernaryForm, TernaryForm]:
    """The cubic resolvent F and the quadratics Q1, Q2 of a monic quartic."""
    a1, a2, a3, a4 = c.a1, c.a2, c.a3, c.a4
    f = ResolventForm((1, -a2, a1 * a3 - 4 * a4,
                       4 * a2 * a4 - a3 * a3 - a1 * a1 * a4))
    q1 = TernaryForm((1, -a1, a2, a1 * a1 - 2 * a2, a3 - a1 * a2,
                      -a1 * a3 + a2 * a2 + a4))
    q2 = TernaryForm((0, 0, 1, -1, -a1, a2))
    return f, q1, q2


def family_coeffs(t: int) -> QuarticCoeffs:
    return QuarticCoeffs(-t, -6, t, 1)


@lru_cache(maxsize=None)
def family_forms(t: int) -> tuple[ResolventForm, TernaryForm, TernaryForm]:
    return build_forms(family_coeffs(t))


def index_via_forms(p: PowerRep, param: FamilyParameter) -> int | None:
    """Index of the element with power representation p, from the forms.

    Computes u = Q1(x,y,z), v = Q2(x,y,z) and m = n*|F(u,v)| / d^6; the
    division is exact for elements of Z_K.  None when F(u,v) = 0 (p does
    not generate the field).
    """
    f, q1, q2 = family_forms(param.t)
    u = q1(p.x, p.y, p.z)
    v = q2(p.x, p.y, p.z)
    fv = f(u, v)
    if fv == 0:
        return None
    m, r = divmod(param.n * abs(fv), p.d ** 6)
    if r != 0:
        raise ArithmeticError(f"forms index not integral for {p}")
    return m


def rhs_decompositions(param: FamilyParameter, m: int) -> tuple[int, int]:
    """The unique (a, l) with g^6 * m / n = a * 2^l, a odd.

    For 1 <= m <= n the result has a in {1,...,15} odd and 4 <= l <= 12.
    """
    if not 1 <= m <= param.n:
        raise NotInRange(f"m = {m} outside 1..{param.n}")
    val = param.g ** 6 * m // param.n
    l = v2(val)
    return (val >> l, l)
