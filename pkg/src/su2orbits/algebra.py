"""Quaternion and rotation arithmetic, eigen- and root-extraction primitives.

Conventions fixed here and relied on everywhere else:

* quaternions are (w, x, y, z) with Hamilton products ij = k, jk = i, ki = j;
* a unit quaternion q acts on R^3 = span(i, j, k) by v -> q v q^-1, and
  ``su2_to_so3`` returns that rotation matrix;
* the 2x2 complex matrix model of a unit quaternion is ``su2_matrix``:
  1 -> I, i -> [[0,-i],[-i,0]], j -> [[0,1],[-1,0]], k -> [[i,0],[0,-i]],
  so the diagonal torus diag(e^{it}, e^{-it}) is cos t + k sin t;
* a binary form sum_k c_k x^{n-k} y^k factors as C * prod_j (a_j x - b_j y)
  with unit root pairs (a_j, b_j); missing leading coefficients contribute
  (0, 1)-direction roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateLoopError,
    UndersampledLoopError,
    ZeroPolynomialError,
)

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Quaternion:
    """A quaternion w + x i + y j + z k with real components."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        return Quaternion(self.w * other, self.x * other,
                          self.y * other, self.z * other)

    def __rmul__(self, scalar: float) -> "Quaternion":
        return Quaternion(self.w * scalar, self.x * scalar,
                          self.y * scalar, self.z * scalar)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return math.sqrt(self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2)

    def imag(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def is_imaginary(self, tol: float = 1e-10) -> bool:
        return abs(self.w) <= tol * max(1.0, self.norm())

    def to_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    @staticmethod
    def from_array(a) -> "Quaternion":
        w, x, y, z = (float(v) for v in a)
        return Quaternion(w, x, y, z)

    @staticmethod
    def from_imag(v) -> "Quaternion":
        x, y, z = (float(c) for c in v)
        return Quaternion(0.0, x, y, z)


ONE = Quaternion(1.0)
QI = Quaternion(0.0, 1.0, 0.0, 0.0)
QJ = Quaternion(0.0, 0.0, 1.0, 0.0)
QK = Quaternion(0.0, 0.0, 0.0, 1.0)


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product a * b (ij = k convention)."""
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
        a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x,
    )


def quat_conj(a: Quaternion) -> Quaternion:
    return a.conj()


def quat_norm(a: Quaternion) -> float:
    return a.norm()


@dataclass(frozen=True)
class UnitQuaternion:
    """A quaternion renormalized to unit modulus on construction."""

    q: Quaternion

    def __post_init__(self):
        n = self.q.norm()
        if n == 0.0 or not math.isfinite(n):
            raise ValueError("cannot normalize a zero or non-finite quaternion")
        if abs(n - 1.0) > 1e-12:
            object.__setattr__(self, "q", self.q * (1.0 / n))

    def __mul__(self, other: "UnitQuaternion") -> "UnitQuaternion":
        return UnitQuaternion(quat_mul(self.q, other.q))

    def inverse(self) -> "UnitQuaternion":
        return UnitQuaternion(self.q.conj())

    def __neg__(self) -> "UnitQuaternion":
        return UnitQuaternion(-self.q)

    def to_array(self) -> np.ndarray:
        return self.q.to_array()

    @staticmethod
    def from_array(a) -> "UnitQuaternion":
        return UnitQuaternion(Quaternion.from_array(a))

    @staticmethod
    def identity() -> "UnitQuaternion":
        return UnitQuaternion(ONE)

    @staticmethod
    def axis_angle(axis, angle: float) -> "UnitQuaternion":
        ax = np.asarray(axis, dtype=float)
        ax = ax / np.linalg.norm(ax)
        h = 0.5 * angle
        s = math.sin(h)
        return UnitQuaternion(Quaternion(math.cos(h), s * ax[0], s * ax[1], s * ax[2]))

    @staticmethod
    def torus(theta: float) -> "UnitQuaternion":
        """The unit quaternion matching diag(e^{i theta}, e^{-i theta})."""
        return UnitQuaternion(Quaternion(math.cos(theta), 0.0, 0.0, math.sin(theta)))


class Rotation3:
    """A 3x3 rotation matrix (orthonormal columns, determinant +1)."""

    def __init__(self, matrix, tol: float = 1e-10):
        m = np.asarray(matrix, dtype=float)
        if m.shape != (3, 3):
            raise ValueError("Rotation3 needs a 3x3 matrix")
        if np.max(np.abs(m.T @ m - np.eye(3))) > tol:
            raise ValueError("columns are not orthonormal")
        if abs(np.linalg.det(m) - 1.0) > tol:
            raise ValueError("determinant is not +1")
        self.m = m
        self.m.setflags(write=False)

    def __matmul__(self, other):
        if isinstance(other, Rotation3):
            return Rotation3(self.m @ other.m)
        return self.m @ np.asarray(other, dtype=float)

    def inverse(self) -> "Rotation3":
        return Rotation3(self.m.T)

    def to_array(self) -> np.ndarray:
        return self.m

    @staticmethod
    def identity() -> "Rotation3":
        return Rotation3(np.eye(3))


def sym3(matrix, tol: float = 1e-12) -> np.ndarray:
    """Return the symmetric part of a 3x3 matrix, erroring on real asymmetry."""
    m = np.asarray(matrix, dtype=float)
    if m.shape != (3, 3):
        raise ValueError("expected a 3x3 matrix")
    if np.max(np.abs(m - m.T)) > tol * max(1.0, np.max(np.abs(m))):
        raise ValueError("matrix is not symmetric")
    return 0.5 * (m + m.T)


def is_traceless(s: np.ndarray, tol: float = 1e-10) -> bool:
    return abs(np.trace(s)) <= tol * max(1.0, np.max(np.abs(s)))


def su2_to_so3(u: UnitQuaternion) -> Rotation3:
    """Rotation v -> q v q^-1 on the imaginary quaternions, basis (i, j, k)."""
    w, x, y, z = u.q.w, u.q.x, u.q.y, u.q.z
    m = np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])
    return Rotation3(m)


def rotation_matrices(quats: np.ndarray) -> np.ndarray:
    """Batched su2_to_so3 on an (..., 4) array of unit quaternions."""
    q = np.asarray(quats, dtype=float)
    w, x, y, z = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    m = np.empty(q.shape[:-1] + (3, 3))
    m[..., 0, 0] = 1 - 2 * (y * y + z * z)
    m[..., 0, 1] = 2 * (x * y - w * z)
    m[..., 0, 2] = 2 * (x * z + w * y)
    m[..., 1, 0] = 2 * (x * y + w * z)
    m[..., 1, 1] = 1 - 2 * (x * x + z * z)
    m[..., 1, 2] = 2 * (y * z - w * x)
    m[..., 2, 0] = 2 * (x * z - w * y)
    m[..., 2, 1] = 2 * (y * z + w * x)
    m[..., 2, 2] = 1 - 2 * (x * x + y * y)
    return m


def so3_to_su2(r: Rotation3) -> UnitQuaternion:
    """One of the two unit quaternions covering a rotation (Shepperd's method)."""
    m = r.to_array()
    t = np.trace(m)
    if t >= 0.0:
        w = 0.5 * math.sqrt(1.0 + t)
        s = 0.25 / w
        return UnitQuaternion(Quaternion(
            w,
            s * (m[2, 1] - m[1, 2]),
            s * (m[0, 2] - m[2, 0]),
            s * (m[1, 0] - m[0, 1]),
        ))
    i = int(np.argmax(np.diag(m)))
    j, k = (i + 1) % 3, (i + 2) % 3
    v = [0.0, 0.0, 0.0]
    v[i] = 0.5 * math.sqrt(max(1.0 + m[i, i] - m[j, j] - m[k, k], 0.0))
    s = 0.25 / v[i]
    w = s * (m[k, j] - m[j, k])
    v[j] = s * (m[j, i] + m[i, j])
    v[k] = s * (m[k, i] + m[i, k])
    return UnitQuaternion(Quaternion(w, v[0], v[1], v[2]))


def su2_matrix(u: UnitQuaternion) -> np.ndarray:
    """The 2x2 special unitary matrix of a unit quaternion (fixed model)."""
    w, x, y, z = u.q.w, u.q.x, u.q.y, u.q.z
    return np.array([
        [w + 1j * z, y - 1j * x],
        [-y - 1j * x, w - 1j * z],
    ])


def su2_matrices(quats: np.ndarray) -> np.ndarray:
    """Batched su2_matrix on an (..., 4) array."""
    q = np.asarray(quats, dtype=float)
    w, x, y, z = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    m = np.empty(q.shape[:-1] + (2, 2), dtype=complex)
    m[..., 0, 0] = w + 1j * z
    m[..., 0, 1] = y - 1j * x
    m[..., 1, 0] = -y - 1j * x
    m[..., 1, 1] = w - 1j * z
    return m


def matrix_to_unit_quaternion(m) -> UnitQuaternion:
    """Inverse of su2_matrix (the matrix must be special unitary)."""
    m = np.asarray(m, dtype=complex)
    w = 0.5 * (m[0, 0] + m[1, 1]).real
    z = 0.5 * (m[0, 0] - m[1, 1]).imag
    y = 0.5 * (m[0, 1] - m[1, 0]).real
    x = -0.5 * (m[0, 1] + m[1, 0]).imag
    return UnitQuaternion(Quaternion(w, x, y, z))


def haar_su2(rng: np.random.Generator) -> UnitQuaternion:
    """Haar-uniform unit quaternion: four standard Gaussians, normalized."""
    v = rng.standard_normal(4)
    return UnitQuaternion(Quaternion(*v))


def haar_su2_batch(rng: np.random.Generator, n: int) -> np.ndarray:
    """(n, 4) array of independent Haar-uniform unit quaternions."""
    v = rng.standard_normal((n, 4))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def eig_sym3(s) -> tuple[np.ndarray, Rotation3]:
    """Eigenvalues (descending) and a det +1 eigenframe of a symmetric 3x3 matrix.

    Satisfies S = frame @ diag(vals) @ frame.T up to the eigensolver residual.
    For degenerate spectra the frame is one valid choice among many.
    """
    m = sym3(s)
    vals, vecs = np.linalg.eigh(m)
    vals = vals[::-1]
    vecs = vecs[:, ::-1]
    if np.linalg.det(vecs) < 0:
        vecs = vecs.copy()
        vecs[:, 2] = -vecs[:, 2]
    return vals, Rotation3(vecs)


def psd_check(s, tol: float) -> bool:
    """True iff every eigenvalue of the symmetric matrix is >= -tol."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    vals = np.linalg.eigvalsh(sym3(s))
    return bool(vals.min() >= -tol)


def _polish_root(coeffs: np.ndarray, lam: complex) -> complex:
    """A couple of guarded Newton steps on the dehomogenized polynomial."""
    der = np.polyder(coeffs)
    for _ in range(2):
        p = np.polyval(coeffs, lam)
        d = np.polyval(der, lam)
        if abs(d) < 1e-8 * max(1.0, abs(p)):
            break
        step = p / d
        if abs(step) > 0.5 * (1.0 + abs(lam)):
            break
        lam = lam - step
    return lam


def poly_roots(coeffs) -> list[tuple[complex, complex]]:
    """Projective roots of a binary form.

    ``coeffs[k]`` multiplies x^{n-k} y^k.  Returns n unit pairs (a, b), each
    defined up to a unit scalar, such that the form is proportional to
    prod_j (a_j x - b_j y).  Zero leading coefficients contribute
    (0, 1)-direction roots (the factor y).
    """
    scale, roots = factor_binary_form(coeffs)
    del scale
    return roots


def factor_binary_form(coeffs) -> tuple[complex, list[tuple[complex, complex]]]:
    """Factor a binary form as C * prod_j (a_j x - b_j y) with unit (a_j, b_j)."""
    c = np.asarray(coeffs, dtype=complex)
    if c.ndim != 1 or len(c) < 2:
        raise ValueError("need at least two coefficients (degree >= 1)")
    amax = np.max(np.abs(c))
    if amax == 0.0:
        raise ZeroPolynomialError("all coefficients vanish")

    lead_zeros = 0
    while lead_zeros < len(c) - 1 and abs(c[lead_zeros]) <= 1e-14 * amax:
        lead_zeros += 1
    roots = [(0.0 + 0.0j, 1.0 + 0.0j)] * lead_zeros

    tail = c[lead_zeros:]
    if len(tail) > 1:
        lams = np.roots(tail)
        for lam in lams:
            lam = _polish_root(tail, lam)
            # factor (x - lam y): pair (a, b) = (1, lam), normalized
            n = math.hypot(1.0, abs(lam))
            roots.append(((1.0 / n) + 0j, lam / n))

    prod = refactor_roots(roots)
    k = int(np.argmax(np.abs(prod)))
    scale = c[k] / prod[k]
    return scale, roots


def refactor_roots(roots, scale: complex = 1.0) -> np.ndarray:
    """Coefficients of scale * prod_j (a_j x - b_j y)."""
    out = np.array([scale], dtype=complex)
    for a, b in roots:
        out = np.convolve(out, np.array([a, -b], dtype=complex))
    return out


def winding_number(samples) -> int:
    """Winding of a sampled closed loop in C* around the origin.

    The closing increment from the last sample back to the first is included,
    so the loop may be given either with or without a repeated endpoint.
    """
    z = np.asarray(samples, dtype=complex)
    if np.min(np.abs(z)) < 1e-12:
        raise DegenerateLoopError("loop sample with modulus < 1e-12")
    args = np.angle(z)
    inc = np.diff(np.concatenate([args, args[:1]]))
    inc = (inc + np.pi) % (2 * np.pi) - np.pi
    if np.max(np.abs(inc)) >= np.pi - 1e-12:
        raise UndersampledLoopError("argument increment of pi or more between samples")
    total = float(np.sum(inc))
    return int(round(total / (2 * np.pi)))
