"""Concrete representation models, group actions, and scalar invariants.

Cases implemented (tagged union ``RepPoint``):

* ``QuatPair``  -- pair of quaternions, unit quaternion h acts by z_i -> z_i h^-1;
* ``QuatVec``   -- quaternion plus imaginary quaternion, (z, z0) -> (z h^-1, h z0 h^-1);
* ``Mat3``      -- 3x3 real matrices, rotation C acts by A -> A C^-1;
* ``PolyC``     -- complex binary forms of degree m-1, (g.f)(v) = f(g^-1 v);
* ``PolyR``     -- the real form of odd-degree-count PolyC, coefficients
                   satisfying c[m-1-k] = (-1)^k * conj(c[k]) in the flat basis;
* ``FiveThree`` -- traceless symmetric matrix plus vector, (A, v) -> (gAg^-1, gv).

Coefficients of binary forms are stored in the monomial basis
x^{n}, x^{n-1}y, ..., y^{n}.  The invariant norm on forms is the Bombieri
norm: |f|^2 = sum |c_k|^2 / C(n, k), which the substitution action preserves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    Quaternion,
    Rotation3,
    UnitQuaternion,
    factor_binary_form,
    is_traceless,
    poly_roots,
    quat_mul,
    rotation_matrices,
    so3_to_su2,
    su2_matrices,
    su2_matrix,
    su2_to_so3,
    sym3,
)
from .errors import BadDegreeError, TypeMismatchError, ZeroPolynomialError


# ---------------------------------------------------------------------------
# representation dimensions and the q invariant


@dataclass(frozen=True)
class RepSpec:
    """Multiset of nontrivial irreducible dimensions plus trivial multiplicity."""

    dims: tuple[int, ...]
    trivial_mult: int = 0

    def __post_init__(self):
        for n in self.dims:
            if n < 3 or not (n % 4 == 0 or n % 2 == 1):
                raise ValueError(
                    f"invalid irreducible dimension {n}: must be >= 3 and "
                    "divisible by 4 or odd"
                )
        if self.trivial_mult < 0:
            raise ValueError("trivial_mult must be nonnegative")
        object.__setattr__(self, "dims", tuple(sorted(self.dims, reverse=True)))

    @property
    def dim(self) -> int:
        return sum(self.dims) + self.trivial_mult


def q_of(spec: RepSpec) -> int:
    """Sum of floor(n/2) over the nontrivial irreducible dimensions."""
    return sum(n // 2 for n in spec.dims)


def kernel_dim(spec: RepSpec) -> int:
    """Nullity of any nonzero algebra element on the nontrivial part."""
    return sum(spec.dims) - 2 * q_of(spec)


# ---------------------------------------------------------------------------
# points of the representation models


@dataclass(frozen=True)
class QuatPair:
    z1: Quaternion
    z2: Quaternion


@dataclass(frozen=True)
class QuatVec:
    z: Quaternion
    z0: Quaternion


class Mat3:
    def __init__(self, a):
        self.a = np.asarray(a, dtype=float)
        if self.a.shape != (3, 3):
            raise ValueError("Mat3 needs a 3x3 matrix")


class PolyC:
    """Complex binary form of degree m-1 given by m monomial coefficients."""

    def __init__(self, m: int, coeffs):
        c = np.asarray(coeffs, dtype=complex)
        if c.shape != (m,):
            raise ValueError(f"expected {m} coefficients, got shape {c.shape}")
        self.m = m
        self.coeffs = c


class PolyR(PolyC):
    """Real form: c[m-1-(half+k... ] -- see ``reality_defect`` for the constraint."""

    def __init__(self, m: int, coeffs, tol: float = 1e-12):
        if m % 2 == 0:
            raise ValueError("real forms need an odd coefficient count")
        super().__init__(m, coeffs)
        defect = reality_defect(self.coeffs)
        scale = max(1.0, float(np.max(np.abs(self.coeffs))))
        if defect > tol * scale:
            raise ValueError(f"coefficients violate the reality constraint by {defect}")


def reality_defect(coeffs: np.ndarray) -> float:
    """Max violation of c[half+k] = (-1)^k conj(c[half-k]) (flat indexing)."""
    m = len(coeffs)
    half = (m - 1) // 2
    worst = 0.0
    for k in range(half + 1):
        lhs = coeffs[half + k]
        rhs = (-1) ** k * np.conj(coeffs[half - k])
        worst = max(worst, abs(lhs - rhs))
    return worst


def reality_project(coeffs: np.ndarray) -> np.ndarray:
    """Nearest coefficient vector satisfying the reality constraint."""
    m = len(coeffs)
    half = (m - 1) // 2
    out = np.array(coeffs, dtype=complex)
    for k in range(half + 1):
        sign = (-1) ** k
        avg = 0.5 * (out[half + k] + sign * np.conj(out[half - k]))
        out[half + k] = avg
        out[half - k] = sign * np.conj(avg)
    return out


class FiveThree:
    """Pair (A, v): traceless symmetric 3x3 matrix and a 3-vector."""

    def __init__(self, a, v):
        self.a = sym3(a)
        if not is_traceless(self.a):
            raise ValueError("matrix part must be traceless")
        self.v = np.asarray(v, dtype=float)
        if self.v.shape != (3,):
            raise ValueError("vector part must have 3 components")


RepPoint = QuatPair | QuatVec | Mat3 | PolyC | FiveThree


# ---------------------------------------------------------------------------
# norms and distances

_BINOM_CACHE: dict[int, np.ndarray] = {}


def _binom_weights(m: int) -> np.ndarray:
    """1 / C(n, k) weights of the invariant form norm, n = m - 1."""
    w = _BINOM_CACHE.get(m)
    if w is None:
        n = m - 1
        w = np.array([1.0 / math.comb(n, k) for k in range(m)])
        _BINOM_CACHE[m] = w
    return w


def rep_norm(p: RepPoint) -> float:
    if isinstance(p, QuatPair):
        return math.hypot(p.z1.norm(), p.z2.norm())
    if isinstance(p, QuatVec):
        return math.hypot(p.z.norm(), p.z0.norm())
    if isinstance(p, Mat3):
        return float(np.linalg.norm(p.a))
    if isinstance(p, PolyC):
        w = _binom_weights(p.m)
        return float(np.sqrt(np.sum(w * np.abs(p.coeffs) ** 2)))
    if isinstance(p, FiveThree):
        return math.hypot(float(np.linalg.norm(p.a)), float(np.linalg.norm(p.v)))
    raise TypeMismatchError(f"not a representation point: {type(p)!r}")


def rep_distance(p: RepPoint, q: RepPoint) -> float:
    if type(p) is not type(q):
        raise TypeMismatchError("points belong to different cases")
    if isinstance(p, QuatPair):
        return math.hypot((p.z1 - q.z1).norm(), (p.z2 - q.z2).norm())
    if isinstance(p, QuatVec):
        return math.hypot((p.z - q.z).norm(), (p.z0 - q.z0).norm())
    if isinstance(p, Mat3):
        return float(np.linalg.norm(p.a - q.a))
    if isinstance(p, PolyC):
        w = _binom_weights(p.m)
        return float(np.sqrt(np.sum(w * np.abs(p.coeffs - q.coeffs) ** 2)))
    if isinstance(p, FiveThree):
        return math.hypot(float(np.linalg.norm(p.a - q.a)),
                          float(np.linalg.norm(p.v - q.v)))
    raise TypeMismatchError(f"not a representation point: {type(p)!r}")


# ---------------------------------------------------------------------------
# the group actions


def substitution_matrix(n: int, a: np.ndarray) -> np.ndarray:
    """Matrix of f -> f o a on degree-n binary forms (monomial basis)."""
    cols = []
    top = np.array([a[0, 0], a[0, 1]], dtype=complex)
    bot = np.array([a[1, 0], a[1, 1]], dtype=complex)
    for k in range(n + 1):
        # expand (a00 x + a01 y)^(n-k) (a10 x + a11 y)^k
        col = np.array([1.0 + 0.0j])
        for _ in range(n - k):
            col = np.convolve(col, top)
        for _ in range(k):
            col = np.convolve(col, bot)
        cols.append(col)
    return np.stack(cols, axis=1)


def polyc_matrix(g: UnitQuaternion, m: int) -> np.ndarray:
    """Matrix of the action of g on m-coefficient forms: f -> f o g^-1."""
    return substitution_matrix(m - 1, su2_matrix(g.inverse()))


def _as_unit_quaternion(g) -> UnitQuaternion:
    if isinstance(g, UnitQuaternion):
        return g
    if isinstance(g, Rotation3):
        return so3_to_su2(g)
    raise TypeMismatchError(f"not a group element: {type(g)!r}")


def act(g, p: RepPoint) -> RepPoint:
    """Apply a group element to a representation point.

    SU(2) cases (QuatPair, QuatVec, PolyC with even m) require a
    UnitQuaternion.  SO(3) cases accept either a Rotation3 or a
    UnitQuaternion through the covering homomorphism.
    """
    if isinstance(p, QuatPair):
        if not isinstance(g, UnitQuaternion):
            raise TypeMismatchError("QuatPair is an SU(2) case; pass a UnitQuaternion")
        hinv = g.q.conj()
        return QuatPair(quat_mul(p.z1, hinv), quat_mul(p.z2, hinv))
    if isinstance(p, QuatVec):
        if not isinstance(g, UnitQuaternion):
            raise TypeMismatchError("QuatVec is an SU(2) case; pass a UnitQuaternion")
        hinv = g.q.conj()
        return QuatVec(quat_mul(p.z, hinv),
                       quat_mul(quat_mul(g.q, p.z0), hinv))
    if isinstance(p, Mat3):
        r = g if isinstance(g, Rotation3) else su2_to_so3(_as_unit_quaternion(g))
        return Mat3(p.a @ r.to_array().T)
    if isinstance(p, PolyR):
        u = _as_unit_quaternion(g)
        coeffs = polyc_matrix(u, p.m) @ p.coeffs
        return PolyR(p.m, reality_project(coeffs))
    if isinstance(p, PolyC):
        if not isinstance(g, UnitQuaternion):
            raise TypeMismatchError("PolyC is an SU(2) case; pass a UnitQuaternion")
        return PolyC(p.m, polyc_matrix(g, p.m) @ p.coeffs)
    if isinstance(p, FiveThree):
        r = g if isinstance(g, Rotation3) else su2_to_so3(_as_unit_quaternion(g))
        rm = r.to_array()
        return FiveThree(rm @ p.a @ rm.T, rm @ p.v)
    raise TypeMismatchError(f"not a representation point: {type(p)!r}")


# ---------------------------------------------------------------------------
# algebra actions (exact differentials of one-parameter subgroups)

_SU2_GENERATORS = (
    np.array([[0.0, -1j], [-1j, 0.0]]),          # i
    np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex),   # j
    np.array([[1j, 0.0], [0.0, -1j]]),           # k
)

_SO3_GENERATORS = tuple(
    np.array(m, dtype=float)
    for m in (
        [[0, 0, 0], [0, 0, -1], [0, 1, 0]],
        [[0, 0, 1], [0, 0, 0], [-1, 0, 0]],
        [[0, -1, 0], [1, 0, 0], [0, 0, 0]],
    )
)


def form_generator_matrix(n: int, x: np.ndarray) -> np.ndarray:
    """Derivative at t = 0 of f -> f o exp(-t x) on degree-n forms."""
    out = np.zeros((n + 1, n + 1), dtype=complex)
    for k in range(n + 1):
        # d/dt of x^{n-k} y^k along x -> x - t(x00 x + x01 y), etc.
        i, j = n - k, k
        if i > 0:
            out[k, k] += -i * x[0, 0]
            out[k + 1, k] += -i * x[1, 0]
        if j > 0:
            out[k, k] += -j * x[1, 1]
            out[k - 1, k] += -j * x[0, 1]
    return out


def algebra_tangents(p: RepPoint) -> list[np.ndarray]:
    """Real-flattened tangent vectors xi . p for a basis of the Lie algebra."""
    tangents = []
    if isinstance(p, QuatPair):
        for xi in (Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)):
            t1 = -1.0 * quat_mul(p.z1, xi)
            t2 = -1.0 * quat_mul(p.z2, xi)
            tangents.append(np.concatenate([t1.to_array(), t2.to_array()]))
    elif isinstance(p, QuatVec):
        for xi in (Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)):
            t1 = -1.0 * quat_mul(p.z, xi)
            t2 = quat_mul(xi, p.z0) - quat_mul(p.z0, xi)
            tangents.append(np.concatenate([t1.to_array(), t2.to_array()]))
    elif isinstance(p, Mat3):
        for l in _SO3_GENERATORS:
            tangents.append((-p.a @ l).ravel())
    elif isinstance(p, PolyC):
        for x in _SU2_GENERATORS:
            dc = form_generator_matrix(p.m - 1, x) @ p.coeffs
            tangents.append(np.concatenate([dc.real, dc.imag]))
    elif isinstance(p, FiveThree):
        for l in _SO3_GENERATORS:
            da = l @ p.a - p.a @ l
            tangents.append(np.concatenate([da.ravel(), l @ p.v]))
    else:
        raise TypeMismatchError(f"not a representation point: {type(p)!r}")
    return tangents


# ---------------------------------------------------------------------------
# omega and the full matrix of an element on a RepSpec

_REAL_BASIS_CACHE: dict[int, np.ndarray] = {}


def real_form_basis(m: int) -> np.ndarray:
    """Columns: a real basis of the real form inside the m-coefficient forms."""
    b = _REAL_BASIS_CACHE.get(m)
    if b is not None:
        return b
    half = (m - 1) // 2
    cols = []
    e = np.eye(m, dtype=complex)
    cols.append(e[:, half])  # the central monomial, real coefficient
    s = 1.0 / math.sqrt(2.0)
    for k in range(1, half + 1):
        sign = (-1) ** k
        cols.append(s * (e[:, half - k] + sign * e[:, half + k]))
        cols.append(s * (1j * e[:, half - k] - sign * 1j * e[:, half + k]))
    b = np.stack(cols, axis=1)
    _REAL_BASIS_CACHE[m] = b
    return b


def _realify(m: np.ndarray) -> np.ndarray:
    """Real 2n x 2n matrix of a complex n x n matrix."""
    return np.block([[m.real, -m.imag], [m.imag, m.real]])


def rep_matrix(g, spec: RepSpec, include_trivial: bool = False) -> np.ndarray:
    """Real matrix of the action of g on the direct sum of the spec's irreducibles."""
    needs_su2 = any(n % 4 == 0 for n in spec.dims)
    if isinstance(g, Rotation3):
        if needs_su2:
            raise TypeMismatchError(
                "a rotation does not determine the action on 4m-dimensional "
                "components; pass a UnitQuaternion"
            )
        u = so3_to_su2(g)
    else:
        u = _as_unit_quaternion(g)
    blocks = []
    for n in spec.dims:
        if n % 4 == 0:
            mc = polyc_matrix(u, n // 2)
            blocks.append(_realify(mc))
        else:
            b = real_form_basis(n)
            mc = polyc_matrix(u, n)
            mr = np.conj(b.T) @ mc @ b
            blocks.append(mr.real)
    if include_trivial and spec.trivial_mult:
        blocks.append(np.eye(spec.trivial_mult))
    total = sum(b.shape[0] for b in blocks)
    out = np.zeros((total, total))
    at = 0
    for b in blocks:
        k = b.shape[0]
        out[at:at + k, at:at + k] = b
        at += k
    return out


def _rank(m: np.ndarray, tol: float) -> int:
    if m.size == 0:
        return 0
    sv = np.linalg.svd(m, compute_uv=False)
    return int(np.sum(sv > tol))


def omega(g, spec: RepSpec, sv_tol: float = 1e-8) -> int:
    """rk(E - g) - rk(E - Ad(g)) on the spec's nontrivial part."""
    m = rep_matrix(g, spec)
    ad = su2_to_so3(_as_unit_quaternion(g)).to_array() if not isinstance(g, Rotation3) \
        else g.to_array()
    r1 = _rank(np.eye(m.shape[0]) - m, sv_tol)
    r2 = _rank(np.eye(3) - ad, sv_tol)
    return r1 - r2


# ---------------------------------------------------------------------------
# roots on the sphere

def _hopf(a: complex, b: complex) -> np.ndarray:
    ab = a * np.conj(b)
    return np.array([2.0 * ab.real, 2.0 * ab.imag,
                     (b * np.conj(b)).real - (a * np.conj(a)).real])


def factor_vector(root: tuple[complex, complex]) -> np.ndarray:
    """The C^2 vector pairing to the factor a x - b y: (conj(a), -conj(b))."""
    a, b = root
    return np.array([np.conj(a), -np.conj(b)])


def sphere_point_of_vector(v) -> np.ndarray:
    """Image on S^2 of a C^2 direction under the fixed sphere chart.

    (1, 0) maps to the south pole (0, 0, -1); the chart intertwines the
    matrix model of a unit quaternion with su2_to_so3 of the same quaternion.
    """
    v = np.asarray(v, dtype=complex)
    n = np.linalg.norm(v)
    if n == 0:
        raise ZeroPolynomialError("zero vector has no sphere direction")
    return _hopf(v[0] / n, v[1] / n)


def vector_of_sphere_point(p) -> np.ndarray:
    """A unit C^2 vector mapping to the given point of S^2 (section of the chart)."""
    p = np.asarray(p, dtype=float)
    a2 = max(0.0, 0.5 * (1.0 - p[2]))
    b2 = max(0.0, 0.5 * (1.0 + p[2]))
    a = math.sqrt(a2)
    if a > 1e-12:
        b = np.conj(complex(p[0], p[1]) * 0.5) / a
    else:
        b = math.sqrt(b2)
    return np.array([a, b], dtype=complex)


def roots_to_sphere(p: PolyC) -> np.ndarray:
    """Multiset (array of rows) of sphere points of the projective roots."""
    roots = poly_roots(p.coeffs)
    return np.array([sphere_point_of_vector(factor_vector(r)) for r in roots])


def antipodal_defect(points: np.ndarray) -> float:
    """How far a sphere multiset is from being antipodally symmetric.

    Greedy matching into +/- pairs; returns the largest |p + q| over matched
    pairs (0 for an exactly symmetric multiset).
    """
    pts = [np.asarray(q, dtype=float) for q in points]
    if len(pts) % 2 != 0:
        return float("inf")
    worst = 0.0
    while pts:
        p = pts.pop()
        dists = [float(np.linalg.norm(p + q)) for q in pts]
        j = int(np.argmin(dists))
        worst = max(worst, dists[j])
        pts.pop(j)
    return worst


def antipodal_representatives(points: np.ndarray) -> np.ndarray:
    """One point per antipodal pair (pairing greedily)."""
    pts = [np.asarray(q, dtype=float) for q in points]
    reps = []
    while pts:
        p = pts.pop()
        dists = [float(np.linalg.norm(p + q)) for q in pts]
        j = int(np.argmin(dists))
        pts.pop(j)
        reps.append(p)
    return np.array(reps)


# ---------------------------------------------------------------------------
# explicit stabilizer witnesses in odd dimensions


def lemma_witnesses(m: int) -> tuple[PolyR, PolyR, UnitQuaternion]:
    """Vectors of the (2m+1)-dimensional irreducible with known stabilizers.

    Returns (torus_vector, finite_vector, finite_element): the monomial
    x^m y^m whose stabilizer is the diagonal one-parameter torus, the form
    x^{2m} + (-1)^m y^{2m} with finite stabilizer, and the nontrivial torus
    element diag(e^{i pi/m}, e^{-i pi/m}) fixing the latter.
    """
    if m < 2:
        raise BadDegreeError("finite-stabilizer witness needs m >= 2")
    size = 2 * m + 1
    torus_coeffs = np.zeros(size, dtype=complex)
    torus_coeffs[m] = 1.0  # x^m y^m
    finite_coeffs = np.zeros(size, dtype=complex)
    finite_coeffs[0] = 1.0            # x^{2m}
    finite_coeffs[2 * m] = (-1) ** m  # y^{2m}
    element = UnitQuaternion.torus(math.pi / m)
    return PolyR(size, torus_coeffs), PolyR(size, finite_coeffs), element


# ---------------------------------------------------------------------------
# batched actions (used by the search oracle)


def batch_act_distance(p: RepPoint, target: RepPoint, quats: np.ndarray) -> np.ndarray:
    """Distances |act(g, p) - target| for an (N, 4) batch of unit quaternions."""
    q = np.asarray(quats, dtype=float)
    if isinstance(p, QuatPair) or isinstance(p, QuatVec):
        return _batch_quat_case(p, target, q)
    if isinstance(p, Mat3):
        r = rotation_matrices(q)
        moved = np.einsum("ij,nkj->nik", p.a, r)
        return np.linalg.norm(moved - target.a, axis=(1, 2))
    if isinstance(p, FiveThree):
        r = rotation_matrices(q)
        ra = np.einsum("nij,jk,nlk->nil", r, p.a, r)
        rv = np.einsum("nij,j->ni", r, p.v)
        da = np.linalg.norm(ra - target.a, axis=(1, 2))
        dv = np.linalg.norm(rv - target.v, axis=1)
        return np.hypot(da, dv)
    if isinstance(p, PolyC):
        mats = _subst_matrices_batch(p.m - 1, su2_matrices(_conj_batch(q)))
        moved = np.einsum("nij,j->ni", mats, p.coeffs)
        w = _binom_weights(p.m)
        return np.sqrt(np.sum(w * np.abs(moved - target.coeffs) ** 2, axis=1))
    raise TypeMismatchError(f"not a representation point: {type(p)!r}")


def _conj_batch(q: np.ndarray) -> np.ndarray:
    out = np.array(q, dtype=float)
    out[..., 1:] = -out[..., 1:]
    return out


def _batch_quat_case(p, target, q: np.ndarray) -> np.ndarray:
    hinv = _conj_batch(q)
    if isinstance(p, QuatPair):
        m1 = _qmul_batch(p.z1.to_array()[None, :], hinv)
        m2 = _qmul_batch(p.z2.to_array()[None, :], hinv)
        d1 = np.linalg.norm(m1 - target.z1.to_array(), axis=1)
        d2 = np.linalg.norm(m2 - target.z2.to_array(), axis=1)
        return np.hypot(d1, d2)
    m1 = _qmul_batch(p.z.to_array()[None, :], hinv)
    m2 = _qmul_batch(_qmul_batch(q, p.z0.to_array()[None, :]), hinv)
    d1 = np.linalg.norm(m1 - target.z.to_array(), axis=1)
    d2 = np.linalg.norm(m2 - target.z0.to_array(), axis=1)
    return np.hypot(d1, d2)


def _qmul_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    bw, bx, by, bz = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack([
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by + ay * bw + az * bx - ax * bz,
        aw * bz + az * bw + ax * by - ay * bx,
    ], axis=-1)


def _subst_matrices_batch(n: int, mats: np.ndarray) -> np.ndarray:
    """Batched substitution matrices for degree-n forms; mats is (N, 2, 2)."""
    nn = mats.shape[0]
    out = np.empty((nn, n + 1, n + 1), dtype=complex)
    # powers of the two linear forms, as coefficient rows per batch entry
    top_pows = _linear_form_powers(mats[:, 0, 0], mats[:, 0, 1], n)
    bot_pows = _linear_form_powers(mats[:, 1, 0], mats[:, 1, 1], n)
    for k in range(n + 1):
        a = top_pows[n - k]  # (N, n-k+1)
        b = bot_pows[k]      # (N, k+1)
        col = np.zeros((nn, n + 1), dtype=complex)
        for i in range(a.shape[1]):
            col[:, i:i + b.shape[1]] += a[:, i:i + 1] * b
        out[:, :, k] = col
    return out


def _linear_form_powers(u: np.ndarray, v: np.ndarray, n: int) -> list[np.ndarray]:
    """pows[d][:, j] = C(d, j) u^{d-j} v^j for d = 0..n."""
    nn = u.shape[0]
    pows = [np.ones((nn, 1), dtype=complex)]
    for d in range(1, n + 1):
        prev = pows[-1]
        cur = np.zeros((nn, d + 1), dtype=complex)
        cur[:, :d] += prev * u[:, None]
        cur[:, 1:] += prev * v[:, None]
        pows.append(cur)
    return pows
