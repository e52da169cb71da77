"""Orbit-separating maps, their sections, and the theta-function system.

The three flat cases come with constructive sections (right inverses):

* pairs of quaternions        ->  R + H     via (|z1|^2 - |z2|^2, z1 conj(z2));
* quaternion + imaginary part ->  R + Im H  via (|z|^2 - |z0|^2, z z0 conj(z));
* 3x3 matrices                ->  traceless symmetric + determinant.

Each section reduces to ``solve_unique_t``: on [-min(d_i), inf) the product
prod (t + d_i) increases strictly from 0, so it meets any nonnegative target
exactly once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    Quaternion,
    eig_sym3,
    factor_binary_form,
    quat_mul,
)
from .errors import (
    NegativeTargetError,
    NotImaginaryError,
    OutOfRangeError,
    ZeroPolynomialError,
    ZeroVectorError,
)
from .reps import Mat3, PolyC, QuatPair, QuatVec, factor_vector


# ---------------------------------------------------------------------------
# quotient coordinates


@dataclass(frozen=True)
class RH:
    """Coordinate (d, lam) in R + H for the pair-of-quaternions case."""

    d: float
    lam: Quaternion


@dataclass(frozen=True)
class RH0:
    """Coordinate (d, lam0) with lam0 purely imaginary."""

    d: float
    lam0: Quaternion


@dataclass(frozen=True)
class SymDet:
    """Coordinate (S, det): traceless symmetric part of A A^T plus det A."""

    s: np.ndarray
    det: float


@dataclass(frozen=True)
class Chart53:
    """Six-component chart value for the matrix-plus-vector case."""

    y: tuple[float, float, float, float, float, float]


@dataclass(frozen=True)
class ThetaValues:
    tp1: complex
    tp2: complex
    theta1: complex
    theta2: complex
    theta3: complex


def coord_distance(a, b) -> float:
    """Euclidean distance between two quotient coordinates of the same kind."""
    if isinstance(a, RH) and isinstance(b, RH):
        return math.hypot(a.d - b.d, (a.lam - b.lam).norm())
    if isinstance(a, RH0) and isinstance(b, RH0):
        return math.hypot(a.d - b.d, (a.lam0 - b.lam0).norm())
    if isinstance(a, SymDet) and isinstance(b, SymDet):
        return math.hypot(float(np.linalg.norm(a.s - b.s)), a.det - b.det)
    if isinstance(a, Chart53) and isinstance(b, Chart53):
        return float(np.linalg.norm(np.array(a.y) - np.array(b.y)))
    raise TypeError("mismatched quotient coordinates")


# ---------------------------------------------------------------------------
# the monotone product solve


def solve_unique_t(d, target: float) -> float:
    """The unique t with t + d_i >= 0 for all i and prod(t + d_i) = target.

    ``target`` must be nonnegative; the result is polished with Newton steps
    to near machine precision (relative residual <= 1e-12).
    """
    if target < 0:
        raise NegativeTargetError("product target must be nonnegative")
    d = np.asarray(d, dtype=float)
    if d.ndim != 1 or len(d) == 0:
        raise ValueError("need at least one offset")
    lo = -float(d.min())
    if target == 0.0:
        return lo

    def f(t):
        return float(np.prod(t + d))

    hi = lo + max(1.0, target ** (1.0 / len(d)))
    while f(hi) < target:
        hi = lo + 2.0 * (hi - lo)
    # bisection to a safe bracket, then Newton
    flo = 0.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm < target:
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo <= 1e-15 * max(1.0, abs(hi)):
            break
    t = 0.5 * (lo + hi)
    for _ in range(8):
        vals = t + d
        p = float(np.prod(vals))
        dp = sum(p / v if v != 0 else np.prod(np.delete(vals, i))
                 for i, v in enumerate(vals))
        if dp <= 0:
            break
        step = (p - target) / dp
        t_new = t - step
        if t_new + d.min() < 0:
            t_new = 0.5 * (t + (-d.min()))  # stay inside the monotone branch
        t = t_new
        if abs(step) <= 1e-16 * max(1.0, abs(t)):
            break
    return float(t)


# ---------------------------------------------------------------------------
# case 1: pairs of quaternions


def inv_44(p: QuatPair) -> RH:
    d = p.z1.norm() ** 2 - p.z2.norm() ** 2
    lam = quat_mul(p.z1, p.z2.conj())
    return RH(d, lam)


def section_44(c: RH) -> QuatPair:
    lam2 = c.lam.norm() ** 2
    t = solve_unique_t((0.0, c.d), lam2)
    td = t + c.d
    if td > 1e-300:
        z1 = Quaternion(math.sqrt(td))
        z2 = c.lam.conj() * (1.0 / math.sqrt(td))
    else:
        z1 = Quaternion()
        z2 = Quaternion(math.sqrt(max(t, 0.0)))
    return QuatPair(z1, z2)


# ---------------------------------------------------------------------------
# case 2: quaternion plus imaginary quaternion


def inv_43(p: QuatVec, tol: float = 1e-10) -> RH0:
    if not p.z0.is_imaginary(tol):
        raise NotImaginaryError("second component must be purely imaginary")
    d = p.z.norm() ** 2 - p.z0.norm() ** 2
    lam0 = quat_mul(quat_mul(p.z, p.z0), p.z.conj())
    lam0 = Quaternion(0.0, lam0.x, lam0.y, lam0.z)
    return RH0(d, lam0)


def section_43(c: RH0) -> QuatVec:
    if not c.lam0.is_imaginary(1e-10):
        raise NotImaginaryError("coordinate lam0 must be purely imaginary")
    lam2 = c.lam0.norm() ** 2
    t = solve_unique_t((0.0, c.d, c.d), lam2)
    td = t + c.d
    if td > 1e-300:
        z = Quaternion(math.sqrt(td))
        z0 = c.lam0 * (1.0 / td)
    else:
        z = Quaternion()
        z0 = Quaternion(0.0, math.sqrt(max(t, 0.0)), 0.0, 0.0)
    return QuatVec(z, z0)


# ---------------------------------------------------------------------------
# case 3: 3x3 matrices


def inv_333(p: Mat3) -> SymDet:
    gram = p.a @ p.a.T
    s = gram - (np.trace(gram) / 3.0) * np.eye(3)
    return SymDet(s, float(np.linalg.det(p.a)))


def section_333(c: SymDet) -> Mat3:
    vals, frame = eig_sym3(c.s)
    t = solve_unique_t(vals, c.det ** 2)
    root = np.sqrt(np.clip(t + vals, 0.0, None))
    f = frame.to_array()
    p = f @ np.diag(root) @ f.T
    if c.det < 0:
        p = p @ np.diag([1.0, 1.0, -1.0])
    return Mat3(p)


# ---------------------------------------------------------------------------
# the theta system on triples of C^2 vectors


def _herm(u, v) -> complex:
    return complex(np.conj(u[0]) * v[0] + np.conj(u[1]) * v[1])


def _det2(u, v) -> complex:
    return complex(u[0] * v[1] - u[1] * v[0])


def theta_prime_1(v1, v2, v3) -> complex:
    return _herm(v3, v1) * _det2(v3, v2) + _herm(v3, v2) * _det2(v3, v1)


def theta_prime_2(v1, v2, v3) -> complex:
    return _det2(v1, v2) ** 2


def theta_values(v1, v2, v3) -> ThetaValues:
    """All theta quantities of an ordered triple of C^2 vectors.

    theta_j is the product of theta'_j over the three cyclic rotations of the
    arguments; theta3 is the auxiliary product used in the winding analysis.
    Intended for (near-)unit vectors.
    """
    v1 = np.asarray(v1, dtype=complex)
    v2 = np.asarray(v2, dtype=complex)
    v3 = np.asarray(v3, dtype=complex)
    tp1 = theta_prime_1(v1, v2, v3)
    tp2 = theta_prime_2(v1, v2, v3)
    theta1 = tp1 * theta_prime_1(v2, v3, v1) * theta_prime_1(v3, v1, v2)
    theta2 = tp2 * theta_prime_2(v2, v3, v1) * theta_prime_2(v3, v1, v2)
    theta3 = (theta_prime_1(v2, v3, v1) * theta_prime_1(v3, v1, v2)) ** 2 * theta2
    return ThetaValues(tp1, tp2, theta1, theta2, theta3)


def pi_poly(v1, v2, v3) -> PolyC:
    """The cubic form v -> prod_j <v_j, v> as a 4-coefficient PolyC."""
    coeffs = np.array([1.0 + 0.0j])
    for v in (v1, v2, v3):
        v = np.asarray(v, dtype=complex)
        if np.linalg.norm(v) < 1e-300:
            raise ZeroVectorError("pi_poly needs nonzero vectors")
        coeffs = np.convolve(coeffs, np.conj(v))
    return PolyC(4, coeffs)


def factor_unit_vectors(f: PolyC) -> tuple[float, list[np.ndarray]]:
    """Write a cubic form as c * prod <u_j, .> with unit u_j; returns (|c|, u)."""
    scale, roots = factor_binary_form(f.coeffs)
    return abs(scale), [factor_vector(r) for r in roots]


def r_norm(f: PolyC) -> float:
    """Product of the factor norms of a nonzero binary form.

    Homogeneous of degree 1: r_norm(lam * f) = |lam| * r_norm(f).
    """
    c = np.asarray(f.coeffs)
    if np.max(np.abs(c)) == 0:
        raise ZeroPolynomialError("zero form")
    scale, _ = factor_binary_form(c)
    return abs(scale)


def normalize_r(f: PolyC) -> PolyC:
    """Rescale a form onto the r = 1 cross-section."""
    return PolyC(f.m, f.coeffs / r_norm(f))


# ---------------------------------------------------------------------------
# the norm-preserving chart C^2 -> R^3 with fibers (lam z1, lam^2 z2)


def hopf_phi0(z1: complex, z2: complex) -> np.ndarray:
    """Piecewise chart collapsing the (lam z1, lam^2 z2) circles; length-preserving."""
    z1 = complex(z1)
    z2 = complex(z2)
    n2 = abs(z1) ** 2 + abs(z2) ** 2
    if z1 == 0:
        return np.array([abs(z2), 0.0, 0.0])
    root = math.sqrt(n2)
    w = z1 * z1 * np.conj(z2)
    denom = abs(z1) * root
    return np.array([
        (abs(z2) ** 2 - abs(z1) ** 2) / root,
        2.0 * w.real / denom,
        2.0 * w.imag / denom,
    ])


# ---------------------------------------------------------------------------
# the six-component chart for the matrix-plus-vector case


def chart_53(s: float, r: float, t: float, u1: float, u2: float, j: int) -> Chart53:
    """Evaluate the chart at cone/angle parameters.

    Requires s, r >= 0, t, u1, u2 in [0, 1], and j in {+1, -1}.  The sixth
    component carries the sheet sign times the boundary-vanishing weight of
    the first five.
    """
    eps = 1e-12
    if s < -eps or r < -eps:
        raise OutOfRangeError("s and r must be nonnegative")
    for name, val in (("t", t), ("u1", u1), ("u2", u2)):
        if val < -eps or val > 1 + eps:
            raise OutOfRangeError(f"{name} must lie in [0, 1]")
    if j not in (1, -1):
        raise OutOfRangeError("j must be +1 or -1")
    s = max(float(s), 0.0)
    r = max(float(r), 0.0)
    t = min(max(float(t), 0.0), 1.0)
    u1 = min(max(float(u1), 0.0), 1.0)
    u2 = min(max(float(u2), 0.0), 1.0)
    y5 = s ** 3 * r * t * (1 - t) * u1 * u2
    y6 = j * s ** 7 * r ** 3 * t ** 2 * (1 - t) ** 2 * u1 ** 2 * (1 - u1) * u2 * (1 - u2)
    return Chart53((s, r, s * t, s * r * u1, y5, y6))


def chart_region_defect(y) -> float:
    """How far the first five chart components sit outside their image region.

    The region is s, r, t, u1, u2 >= 0 with t <= s, u1 <= s r and
    u2 <= t (s - t) u1 in the image coordinates; returns the worst violation.
    """
    s, r, t, u1, u2 = (float(v) for v in y[:5])
    worst = max(-s, -r, -t, -u1, -u2, 0.0)
    worst = max(worst, t - s, u1 - s * r, u2 - t * (s - t) * u1)
    return max(worst, 0.0)


def chart_weight(y) -> float:
    """The boundary-vanishing weight of the first five chart components."""
    s, r, t, u1, u2 = (float(v) for v in y[:5])
    return (s * r - u1) * u2 * (t * (s - t) * u1 - u2)
