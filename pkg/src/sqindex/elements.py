"""Exact arithmetic for algebraic integers of the quartic family.

Elements live in integral-basis coordinates (X0, X1, X2, X3); the power
representation (a + x*xi + y*xi^2 + z*xi^3)/d is the bridge to the
index-form machinery.  The index of an element is recovered from the
discriminant of its characteristic polynomial:

    disc(char_poly(e)) = I(e)^2 * disc_K.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .fieldmodel import FamilyParameter, disc_quartic_monic


class NotIntegral(ValueError):
    """The given power representation is not an algebraic integer of K."""


@dataclass(frozen=True)
class AlgebraicInt:
    """Element of Z_K in integral-basis coordinates."""

    coords: tuple[int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def triple(self) -> tuple[int, int, int]:
        """The translation-invariant part (X1, X2, X3)."""
        return self.coords[1:]


@dataclass(frozen=True)
class PowerRep:
    """(a + x*xi + y*xi^2 + z*xi^3) / d in lowest form, d >= 1."""

    a: int
    x: int
    y: int
    z: int
    d: int

    def __post_init__(self):
        if self.d <= 0:
            raise ValueError("denominator must be positive")

    @staticmethod
    def reduced(a: int, x: int, y: int, z: int, d: int) -> "PowerRep":
        if d < 0:
            a, x, y, z, d = -a, -x, -y, -z, -d
        g = gcd(gcd(abs(a), abs(x)), gcd(gcd(abs(y), abs(z)), d))
        if g > 1:
            a, x, y, z, d = a // g, x // g, y // g, z // g, d // g
        return PowerRep(a, x, y, z, d)

    @property
    def vec(self) -> tuple[int, int, int, int]:
        return (self.a, self.x, self.y, self.z)


def to_power_rep(e: AlgebraicInt, param: FamilyParameter) -> PowerRep:
    """Exact power representation of e, in lowest form."""
    num = [0, 0, 0, 0]
    for xi_coord, row in zip(e.coords, param.basis_num):
        for j in range(4):
            num[j] += xi_coord * row[j]
    return PowerRep.reduced(num[0], num[1], num[2], num[3], param.g)


def coords_from_power(vec: tuple[int, int, int, int], d: int,
                      param: FamilyParameter) -> tuple[int, int, int, int]:
    """Integral-basis coordinates of (vec)/d, or raise NotIntegral."""
    wmat, w = param.basis_inverse
    coords = []
    for i in range(4):
        s = sum(vec[j] * wmat[j][i] for j in range(4))
        q, r = divmod(s, w * d)
        if r != 0:
            raise NotIntegral(f"{vec}/{d} is not in Z_K")
        coords.append(q)
    return tuple(coords)


def from_power_rep(p: PowerRep, param: FamilyParameter) -> AlgebraicInt:
    return AlgebraicInt(coords_from_power(p.vec, p.d, param))


def triple_from_xyz(x: int, y: int, z: int, param: FamilyParameter
                    ) -> tuple[int, int, int] | None:
    """(X1, X2, X3) of any element with power part (x*xi+y*xi^2+z*xi^3)/g.

    The basis matrices are lower triangular, so X1..X3 do not depend on
    the constant term; None when no constant makes the value integral.
    """
    wmat, w = param.basis_inverse
    out = []
    for i in range(1, 4):
        s = x * wmat[1][i] + y * wmat[2][i] + z * wmat[3][i]
        q, r = divmod(s, w * param.g)
        if r != 0:
            return None
        out.append(q)
    return tuple(out)


def _reduce_mod_family(coeffs: list[int], t: int) -> list[int]:
    """Reduce a polynomial in xi (ascending coeffs) mod xi^4 = t*xi^3 + 6*xi^2 - t*xi - 1."""
    c = coeffs[:]
    for k in range(len(c) - 1, 3, -1):
        lead = c[k]
        if lead:
            c[k - 1] += lead * t
            c[k - 2] += lead * 6
            c[k - 3] -= lead * t
            c[k - 4] -= lead
        c.pop()
    while len(c) < 4:
        c.append(0)
    return c


def multiply(u: AlgebraicInt, v: AlgebraicInt, param: FamilyParameter) -> AlgebraicInt:
    """Exact product u*v; integer coordinates certify ring closure."""
    pu = to_power_rep(u, param)
    pv = to_power_rep(v, param)
    prod = [0] * 7
    for i, cu in enumerate(pu.vec):
        if cu:
            for j, cv in enumerate(pv.vec):
                prod[i + j] += cu * cv
    red = _reduce_mod_family(prod, param.t)
    return AlgebraicInt(coords_from_power(tuple(red), pu.d * pv.d, param))


def mult_matrix(e: AlgebraicInt, param: FamilyParameter) -> list[list[int]]:
    """Integer matrix of multiplication by e on the integral basis.

    Column j holds the coordinates of e * b_{j+1}.
    """
    pe = to_power_rep(e, param)
    m = [[0] * 4 for _ in range(4)]
    for j in range(4):
        basis_vec = param.basis_num[j]
        prod = [0] * 7
        for i, ce in enumerate(pe.vec):
            if ce:
                for k, cb in enumerate(basis_vec):
                    prod[i + k] += ce * cb
        red = _reduce_mod_family(prod, param.t)
        col = coords_from_power(tuple(red), pe.d * param.g, param)
        for i in range(4):
            m[i][j] = col[i]
    return m


def charpoly4(m: list[list[int]]) -> tuple[int, int, int, int]:
    """(c0, c1, c2, c3) of det(xI - M) = x^4 + c3 x^3 + c2 x^2 + c1 x + c0."""
    e1 = m[0][0] + m[1][1] + m[2][2] + m[3][3]
    e2 = 0
    for i in range(4):
        for j in range(i + 1, 4):
            e2 += m[i][i] * m[j][j] - m[i][j] * m[j][i]
    e3 = 0
    for rows in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        i, j, k = rows
        e3 += (
            m[i][i] * (m[j][j] * m[k][k] - m[j][k] * m[k][j])
            - m[i][j] * (m[j][i] * m[k][k] - m[j][k] * m[k][i])
            + m[i][k] * (m[j][i] * m[k][j] - m[j][j] * m[k][i])
        )
    e4 = _det4(m)
    return (e4, -e3, e2, -e1)


def _det4(m: list[list[int]]) -> int:
    """4x4 determinant by Laplace expansion on the first two rows."""
    m01 = {}
    m23 = {}
    for i in range(4):
        for j in range(i + 1, 4):
            m01[(i, j)] = m[0][i] * m[1][j] - m[0][j] * m[1][i]
            m23[(i, j)] = m[2][i] * m[3][j] - m[2][j] * m[3][i]
    return (
        m01[(0, 1)] * m23[(2, 3)]
        - m01[(0, 2)] * m23[(1, 3)]
        + m01[(0, 3)] * m23[(1, 2)]
        + m01[(1, 2)] * m23[(0, 3)]
        - m01[(1, 3)] * m23[(0, 2)]
        + m01[(2, 3)] * m23[(0, 1)]
    )


def char_poly(e: AlgebraicInt, param: FamilyParameter) -> tuple[int, int, int, int, int]:
    """Ascending coefficients of the characteristic polynomial of e (monic)."""
    c0, c1, c2, c3 = charpoly4(mult_matrix(e, param))
    return (c0, c1, c2, c3, 1)


def index_oracle(e: AlgebraicInt, param: FamilyParameter) -> int | None:
    """I(e) = sqrt(disc(char_poly(e)) / disc_K); None when e does not generate K."""
    c0, c1, c2, c3, _ = char_poly(e, param)
    disc = disc_quartic_monic(c3, c2, c1, c0)
    if disc == 0:
        return None
    q, r = divmod(disc, param.disc_K)
    if r != 0 or q < 0:
        raise ArithmeticError(f"disc {disc} not a multiple of disc_K for {e}")
    m = isqrt(q)
    if m * m != q:
        raise ArithmeticError(f"disc ratio {q} is not a perfect square for {e}")
    return m


def canonical_triple(triple: tuple[int, int, int]) -> tuple[int, int, int]:
    """Sign-canonical representative of (X1, X2, X3).

    Negates the triple when the last nonzero entry of the sequence
    (X3, X2, X1) is negative, so each {e, -e} pair has one representative.
    """
    x1, x2, x3 = triple
    for lead in (x1, x2, x3):
        if lead != 0:
            if lead < 0:
                return (-x1, -x2, -x3)
            break
    return (x1, x2, x3)
