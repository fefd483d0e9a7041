"""Integer points on ternary quadratic cones and their parametrization.

Given a nontrivial integer zero P of Q0, the line scheme through P turns
every solution of Q0 = 0 into binary quadratics:  substituting
(x,y,z) = r*P + T, T carrying the free parameters (p,q), the vanishing of
Q0 is linear in r, and clearing the denominator yields

    k * (x, y, z) = C . (p^2, p*q, q^2)

with an integer matrix C and a scalar k dividing |det C| / gcd(C)^2.
Substituting the rows into one of the original quadratics then reduces
the system Q1 = +-u, Q2 = +-v to quartic Thue equations, one per divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .indexcore import TernaryForm
from .thue import BinaryQuarticForm

POINT_RADIUS_START = 64
POINT_RADIUS_CAP = 4096

_QR_MOD = 720720  # 2^4 * 3^2 * 5 * 7 * 11 * 13; sparse square residues
_QR_TABLE = None


class DegeneratePoint(ValueError):
    """No coordinate scheme through the point gives a parametrization."""


def _qr_table():
    global _QR_TABLE
    if _QR_TABLE is None:
        t = np.zeros(_QR_MOD, dtype=bool)
        r = (np.arange(_QR_MOD, dtype=np.int64) ** 2) % _QR_MOD
        t[r] = True
        _QR_TABLE = t
    return _QR_TABLE


def _primitive(x: int, y: int, z: int) -> tuple[int, int, int]:
    g = gcd(gcd(abs(x), abs(y)), abs(z))
    return (x // g, y // g, z // g)


def _row_solutions_quadratic(q0: TernaryForm, z: int, radius: int):
    """Solutions (x, y) of Q0(x, y, z) = 0 with |y| <= radius, x^2 coeff != 0.

    Vectorised over y with a quadratic-residue prefilter so the exact
    perfect-square checks only run on a sparse set of candidates.
    """
    cxx, cxy, cyy, cxz, cyz, czz = q0.coeffs
    ys = np.arange(-radius, radius + 1, dtype=np.int64)
    ym = ys % _QR_MOD
    lin_m = ((cxy % _QR_MOD) * ym + (cxz * z) % _QR_MOD) % _QR_MOD
    con_m = ((cyy % _QR_MOD) * ((ys * ys) % _QR_MOD)
             + ((cyz * z) % _QR_MOD) * ym + (czz * z * z) % _QR_MOD) % _QR_MOD
    disc_m = (lin_m * lin_m - 4 * (cxx % _QR_MOD) * con_m) % _QR_MOD
    candidates = np.nonzero(_qr_table()[disc_m])[0]
    out = []
    for i in candidates:
        y = int(ys[i])
        lin = cxy * y + cxz * z
        con = cyy * y * y + cyz * y * z + czz * z * z
        disc = lin * lin - 4 * cxx * con
        if disc < 0:
            continue
        s = isqrt(disc)
        if s * s != disc:
            continue
        for num in (-lin + s, -lin - s):
            qx, r = divmod(num, 2 * cxx)
            if r == 0:
                out.append((qx, y))
    return out


def _row_solutions_linear(q0: TernaryForm, z: int, radius: int):
    """Same as above for forms with zero x^2 coefficient (x enters linearly)."""
    cxx, cxy, cyy, cxz, cyz, czz = q0.coeffs
    out = []
    for mag in range(radius + 1):
        for y in ((0,) if mag == 0 else (mag, -mag)):
            lin = cxy * y + cxz * z
            con = cyy * y * y + cyz * y * z + czz * z * z
            if lin == 0:
                if con == 0 and (y, z) != (0, 0):
                    out.append((0, y))
                continue
            qx, r = divmod(-con, lin)
            if r == 0:
                out.append((qx, y))
    return out


def find_point(q0: TernaryForm, radius_start: int = POINT_RADIUS_START,
               radius_cap: int = POINT_RADIUS_CAP) -> tuple[int, int, int] | None:
    """A primitive nonzero integer solution of Q0 = 0, or None within the cap.

    Deterministic: scans z = 0, 1, 2, ... and picks, in the first row
    containing solutions, the one minimising (|y|, sign, |x|, sign).
    """
    if all(c == 0 for c in q0.coeffs):
        raise ValueError("form is identically zero")
    cxx = q0.coeffs[0]
    radius = radius_start
    while True:
        for z in range(radius + 1):
            if cxx != 0:
                sols = _row_solutions_quadratic(q0, z, radius)
            else:
                sols = _row_solutions_linear(q0, z, radius)
            sols = [(x, y) for x, y in sols if (x, y, z) != (0, 0, 0)]
            if sols:
                x, y = min(sols, key=lambda s: (abs(s[1]), s[1] < 0,
                                                abs(s[0]), s[0] < 0))
                return _primitive(x, y, z)
        if cxx == 0:
            return (1, 0, 0)
        if radius >= radius_cap:
            return None
        radius = min(2 * radius, radius_cap)


@dataclass(frozen=True)
class Parametrization:
    """k*(x,y,z) = C.(p^2, pq, q^2) covering the cone through base_point."""

    rows: tuple[tuple[int, int, int], ...]
    k_bound: int
    base_point: tuple[int, int, int]

    def evaluate(self, p: int, q: int) -> tuple[int, int, int]:
        return tuple(c0 * p * p + c1 * p * q + c2 * q * q
                     for c0, c1, c2 in self.rows)

    def entry_gcd(self) -> int:
        g = 0
        for row in self.rows:
            for c in row:
                g = gcd(g, abs(c))
        return g


def _det3(rows) -> int:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def parametrize(q0: TernaryForm, point: tuple[int, int, int]) -> Parametrization:
    """Parametrize all integer solutions of Q0 = 0 through a known point.

    The scheme attaches r to a nonzero coordinate of the point (z
    preferred, then y, then x) and the parameters (p, q) to the other
    two; the overall sign is fixed by making the first nonzero entry of
    the pivot row positive.
    """
    if q0(*point) != 0:
        raise ValueError(f"{point} is not on the cone")
    if point == (0, 0, 0):
        raise ValueError("need a nonzero point")
    cxx, cxy, cyy, cxz, cyz, czz = q0.coeffs
    x0, y0, z0 = point
    grad = (2 * cxx * x0 + cxy * y0 + cxz * z0,
            cxy * x0 + 2 * cyy * y0 + cyz * z0,
            cxz * x0 + cyz * y0 + 2 * czz * z0)
    for pivot in (2, 1, 0):
        if point[pivot] == 0:
            continue
        free = [i for i in range(3) if i != pivot]
        lam, mu = grad[free[0]], grad[free[1]]
        if lam == 0 and mu == 0:
            continue
        if pivot == 2:
            qt = (cxx, cxy, cyy)
        elif pivot == 1:
            qt = (cxx, cxz, czz)
        else:
            qt = (cyy, cyz, czz)
        rows = []
        for i in range(3):
            row = [qt[0] * point[i], qt[1] * point[i], qt[2] * point[i]]
            if i == free[0]:
                row[0] -= lam
                row[1] -= mu
            elif i == free[1]:
                row[1] -= lam
                row[2] -= mu
            rows.append(tuple(row))
        pivot_row = rows[pivot]
        lead = next((c for c in pivot_row if c != 0), 0)
        if lead < 0:
            rows = [tuple(-c for c in row) for row in rows]
        det = _det3(rows)
        if det == 0:
            continue
        g = 0
        for row in rows:
            for c in row:
                g = gcd(g, abs(c))
        return Parametrization(rows=tuple(rows), k_bound=abs(det) // (g * g),
                               base_point=tuple(point))
    raise DegeneratePoint(f"no valid scheme through {point} for {q0}")


def _mul_quadratics(a, b):
    return (a[0] * b[0],
            a[0] * b[1] + a[1] * b[0],
            a[0] * b[2] + a[1] * b[1] + a[2] * b[0],
            a[1] * b[2] + a[2] * b[1],
            a[2] * b[2])


@dataclass(frozen=True)
class ThueInstance:
    """form(p, q) = +-rhs for the divisor k of the parametrization bound."""

    k: int
    form: BinaryQuarticForm
    rhs: int


@dataclass(frozen=True)
class ThueReduction:
    raw_form: BinaryQuarticForm
    instances: tuple[ThueInstance, ...]


def divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def thue_reduction(par: Parametrization, q: TernaryForm, target: int) -> ThueReduction:
    """Substitute the parametrization into q and list the Thue equations.

    For each positive divisor k of k_bound the equation is
    q(C.(p^2,pq,q^2)) = +-target * k^2; instances whose right side is not
    an integer after dividing out the content of the quartic are dropped.
    """
    if target == 0:
        raise ValueError("target value must be nonzero")
    r1, r2, r3 = par.rows
    cxx, cxy, cyy, cxz, cyz, czz = q.coeffs
    quartic = [0] * 5
    for coeff, pair in ((cxx, (r1, r1)), (cxy, (r1, r2)), (cyy, (r2, r2)),
                        (cxz, (r1, r3)), (cyz, (r2, r3)), (czz, (r3, r3))):
        if coeff:
            prod = _mul_quadratics(*pair)
            for idx in range(5):
                quartic[idx] += coeff * prod[idx]
    raw = BinaryQuarticForm(tuple(quartic))
    cont = raw.content()
    if cont == 0:
        raise ValueError("reduction is identically zero; use the other quadratic")
    prim = BinaryQuarticForm(tuple(c // cont for c in raw.coeffs))
    instances = []
    for k in divisors(par.k_bound):
        rhs, rem = divmod(abs(target) * k * k, cont)
        if rem == 0:
            instances.append(ThueInstance(k=k, form=prim, rhs=rhs))
    return ThueReduction(raw_form=raw, instances=tuple(instances))
