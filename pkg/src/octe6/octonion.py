"""Octonion arithmetic over an explicit Cayley-Dickson multiplication table.

Coefficients are stored over the ordered basis

    (1, i, j, k, kl, jl, il, l)

Writing an octonion as ``p + q*l`` with quaternions ``p`` and ``q``
(quaternion convention ``ij = k``), products follow the doubling rule

    (p, q) (r, s) = (p r - conj(s) q,  s p + q conj(r))

which fixes every sign in the algebra.  ``signed_table()`` exposes the
resulting 8x8 basis table; the ``table`` CLI subcommand prints the same
data for cross-implementation checks.

Array-level helpers (``omul``, ``oconj``, ``omatmul``, ...) operate on
plain float arrays whose last axis has length 8, so matrices of octonions
are ``(n, n, 8)`` arrays.  The :class:`Octonion` class wraps a single
8-vector for scalar work.  All values are immutable after construction.
"""

from __future__ import annotations

import numbers
from collections.abc import Callable, Iterable

import numpy as np

BASIS_NAMES = ("1", "i", "j", "k", "kl", "jl", "il", "l")
IMAGINARY_NAMES = BASIS_NAMES[1:]


def _build_mul_tensor() -> np.ndarray:
    """Multiplication tensor T with (x y)_k = sum_ij x_i y_j T[i, j, k]."""

    def qmul(x, y):
        out = np.empty(4)
        out[0] = x[0] * y[0] - x[1:] @ y[1:]
        out[1:] = x[0] * y[1:] + y[0] * x[1:] + np.cross(x[1:], y[1:])
        return out

    def qconj(x):
        return np.array([x[0], -x[1], -x[2], -x[3]])

    # basis order (1, i, j, k, kl, jl, il, l):
    # quaternion part p = (c0, c1, c2, c3), doubled part q = (c7, c6, c5, c4)
    def to_pq(c):
        return c[[0, 1, 2, 3]], c[[7, 6, 5, 4]]

    def from_pq(p, q):
        return np.array([p[0], p[1], p[2], p[3], q[3], q[2], q[1], q[0]])

    tensor = np.zeros((8, 8, 8))
    eye = np.eye(8)
    for a in range(8):
        p, q = to_pq(eye[a])
        for b in range(8):
            r, s = to_pq(eye[b])
            z1 = qmul(p, r) - qmul(qconj(s), q)
            z2 = qmul(s, p) + qmul(q, qconj(r))
            tensor[a, b] = from_pq(z1, z2)
    tensor.setflags(write=False)
    return tensor


MUL_TENSOR = _build_mul_tensor()


def signed_table() -> np.ndarray:
    """8x8 signed basis table: entry (a, b) is +-(k+1) where e_a e_b = +-e_k."""
    table = np.zeros((8, 8), dtype=int)
    for a in range(8):
        for b in range(8):
            k = int(np.argmax(np.abs(MUL_TENSOR[a, b])))
            table[a, b] = int(np.sign(MUL_TENSOR[a, b, k])) * (k + 1)
    return table


# ---------------------------------------------------------------------------
# array-level kernels: last axis holds the 8 coefficients
# ---------------------------------------------------------------------------

def omul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Octonion product, broadcasting over leading axes."""
    return np.einsum("...i,...j,ijk->...k", x, y, MUL_TENSOR)


def oconj(x: np.ndarray) -> np.ndarray:
    """Octonion conjugate: negate the seven imaginary coefficients."""
    out = np.array(x, dtype=float, copy=True)
    out[..., 1:] *= -1.0
    return out


def onorm(x: np.ndarray) -> np.ndarray | float:
    """Euclidean norm of the coefficient vector(s)."""
    n = np.sqrt(np.sum(np.asarray(x, dtype=float) ** 2, axis=-1))
    return float(n) if n.ndim == 0 else n


def omatmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Product of octonionic matrices, entries paired left to right."""
    # contract B with the table first, then one BLAS matmul over (column, component)
    n = A.shape[0]
    right = np.tensordot(B, MUL_TENSOR, axes=([2], [1]))  # (c, b, I, K)
    right = right.transpose(0, 2, 1, 3).reshape(8 * n, 8 * n)
    return (A.reshape(n, 8 * n) @ right).reshape(n, n, 8)


def odagger(A: np.ndarray) -> np.ndarray:
    """Conjugate transpose of an octonionic matrix."""
    return oconj(np.swapaxes(A, 0, 1))


def imaginary_rank(entries: np.ndarray, rel_tol: float = 1e-9) -> int:
    """Numerical rank of the stacked imaginary parts of a set of octonions.

    Rank 0 means all entries are real; rank 1 means the imaginary parts are
    pairwise parallel, i.e. the entries lie in one complex subalgebra.
    """
    ims = np.asarray(entries, dtype=float).reshape(-1, 8)[:, 1:]
    if not ims.size:
        return 0
    s = np.linalg.svd(ims, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > rel_tol * s[0]))


def _as_coeffs(x) -> np.ndarray:
    if isinstance(x, Octonion):
        return x.coefficients
    arr = np.asarray(x, dtype=float)
    if arr.shape != (8,):
        raise ValueError(f"expected 8 octonion coefficients, got shape {arr.shape}")
    return arr


# ---------------------------------------------------------------------------
# scalar interface
# ---------------------------------------------------------------------------

class Octonion:
    """An octonion: an immutable vector of 8 real coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coefficients):
        c = np.array(coefficients, dtype=float).reshape(8)
        c.setflags(write=False)
        self._c = c

    @classmethod
    def zero(cls) -> "Octonion":
        return cls(np.zeros(8))

    @classmethod
    def one(cls) -> "Octonion":
        return cls.unit(0)

    @classmethod
    def unit(cls, which: int | str) -> "Octonion":
        """Basis octonion by index 0..7 or by name ('1', 'i', ..., 'l')."""
        idx = BASIS_NAMES.index(which) if isinstance(which, str) else int(which)
        c = np.zeros(8)
        c[idx] = 1.0
        return cls(c)

    @classmethod
    def basis(cls) -> tuple["Octonion", ...]:
        return tuple(cls.unit(t) for t in range(8))

    @property
    def coefficients(self) -> np.ndarray:
        return self._c

    @property
    def re(self) -> float:
        return float(self._c[0])

    @property
    def im(self) -> np.ndarray:
        """The seven imaginary coefficients."""
        return self._c[1:]

    @property
    def norm(self) -> float:
        return float(np.sqrt(self._c @ self._c))

    def conj(self) -> "Octonion":
        return Octonion(oconj(self._c))

    def inverse(self) -> "Octonion":
        """Multiplicative inverse conj(x)/norm(x)^2; zero has none."""
        n2 = float(self._c @ self._c)
        if n2 == 0.0:
            raise ZeroDivisionError("the zero octonion has no inverse")
        return Octonion(oconj(self._c) / n2)

    def is_imaginary_unit(self, tol: float = 1e-9) -> bool:
        return abs(self.re) <= tol and abs(self.norm - 1.0) <= tol

    def __add__(self, other):
        if isinstance(other, Octonion):
            return Octonion(self._c + other._c)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Octonion):
            return Octonion(self._c - other._c)
        return NotImplemented

    def __neg__(self):
        return Octonion(-self._c)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return Octonion(omul(self._c, other._c))
        if isinstance(other, numbers.Real):
            return Octonion(self._c * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Octonion(self._c * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return Octonion(self._c / float(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Octonion):
            return bool(np.array_equal(self._c, other._c))
        return NotImplemented

    def isclose(self, other: "Octonion", tol: float = 1e-12) -> bool:
        return bool(np.allclose(self._c, _as_coeffs(other), atol=tol, rtol=0.0))

    def __repr__(self):
        terms = [
            f"{c:+g}{'' if name == '1' else '*' + name}"
            for c, name in zip(self._c, BASIS_NAMES)
            if c != 0.0
        ]
        return "Octonion<%s>" % (" ".join(terms) if terms else "0")


# ---------------------------------------------------------------------------
# exponentials, conjugation maps, automorphisms
# ---------------------------------------------------------------------------

def exp_imag(s, theta: float) -> Octonion:
    """cos(theta) + sin(theta)*s for an imaginary unit s; always unit norm."""
    sv = _as_coeffs(s)
    if abs(sv[0]) > 1e-9 or abs(onorm(sv) - 1.0) > 1e-9:
        raise ValueError("exp_imag requires an imaginary unit octonion")
    out = np.sin(theta) * sv
    out[0] = np.cos(theta)
    return Octonion(out)


def conj_by(u, x) -> Octonion:
    """Conjugation u (x conj(u)) by a unit octonion u.

    Flexibility makes the two parenthesizations u(x conj(u)) and
    (u x) conj(u) agree; both are computed and compared as a tripwire.
    """
    uv, xv = _as_coeffs(u), _as_coeffs(x)
    if abs(onorm(uv) - 1.0) > 1e-9:
        raise ValueError("conj_by requires a unit octonion")
    uc = oconj(uv)
    left = omul(uv, omul(xv, uc))
    right = omul(omul(uv, xv), uc)
    if not np.allclose(left, right, atol=1e-9 * max(1.0, float(onorm(xv)))):
        raise ArithmeticError("flexibility violated; multiplication table is broken")
    return Octonion(left)


def _as_basis_map(f) -> np.ndarray:
    """Realize a linear map on octonions as an 8x8 real matrix."""
    if callable(f):
        wants_octonion = _wants_octonion(f)
        cols = []
        for t in range(8):
            e = np.zeros(8)
            e[t] = 1.0
            y = f(Octonion(e)) if wants_octonion else f(e)
            cols.append(_as_coeffs(y))
        return np.stack(cols, axis=1)
    mat = np.asarray(f, dtype=float)
    if mat.shape != (8, 8):
        raise ValueError("expected an 8x8 matrix or a callable on octonions")
    return mat


def _wants_octonion(f: Callable) -> bool:
    # probe with an array; fall back to Octonion input on failure
    try:
        e = np.zeros(8)
        e[0] = 1.0
        _as_coeffs(f(e))
        return False
    except Exception:
        return True


def is_automorphism(f, tol: float = 1e-9) -> tuple[bool, float]:
    """Whether a linear map on octonions preserves products on all basis pairs.

    Accepts an 8x8 matrix or a callable; returns (verdict, max residual over
    the 64 basis pairs, including the f(1) = 1 check).
    """
    mat = _as_basis_map(f)
    e0 = np.zeros(8)
    e0[0] = 1.0
    residual = float(onorm(mat @ e0 - e0))
    fbasis = mat.T  # row t = image of e_t
    for a in range(8):
        for b in range(8):
            prod = MUL_TENSOR[a, b]
            residual = max(residual, float(onorm(mat @ prod - omul(fbasis[a], fbasis[b]))))
    return residual <= tol, residual


def triality_ell_conjugation_check(tol: float = 1e-12) -> tuple[bool, float]:
    """Check k(j(i q)) = ((q conj(i)) conj(j)) conj(k) = l-conjugation of q.

    l-conjugation negates the l-half of the coefficient vector (the
    conjugation of the quaternion doubling).  Returns (verdict, max
    residual over the 8 basis octonions).
    """
    i, j, k = (Octonion.unit(t).coefficients for t in ("i", "j", "k"))
    flip = np.ones(8)
    flip[4:] = -1.0
    residual = 0.0
    for t in range(8):
        q = np.zeros(8)
        q[t] = 1.0
        lhs = omul(k, omul(j, omul(i, q)))
        rhs = omul(omul(omul(q, oconj(i)), oconj(j)), oconj(k))
        expected = flip * q
        residual = max(residual, float(onorm(lhs - rhs)), float(onorm(lhs - expected)))
    return residual <= tol, residual


def subalgebra_dimension(generators: Iterable, tol: float = 1e-9) -> int:
    """Dimension of the smallest unital subalgebra containing the generators.

    Iterates span closure under multiplication until stable; for octonion
    inputs the result is always 1, 2, 4 or 8.
    """
    vecs = [np.eye(8)[0]]
    for g in generators:
        vecs.append(_as_coeffs(g))
    basis = _orthonormal(np.stack(vecs), tol)
    while True:
        products = omul(basis[:, None, :], basis[None, :, :]).reshape(-1, 8)
        new_basis = _orthonormal(np.vstack([basis, products]), tol)
        if new_basis.shape[0] == basis.shape[0]:
            return int(basis.shape[0])
        basis = new_basis


def _orthonormal(rows: np.ndarray, tol: float) -> np.ndarray:
    _, s, vh = np.linalg.svd(rows, full_matrices=False)
    keep = s > tol * max(s[0], 1.0)
    return vh[keep]


# ---------------------------------------------------------------------------
# seeded sampling
# ---------------------------------------------------------------------------

def random_octonion(rng: np.random.Generator, scale: float = 1.0) -> Octonion:
    """Standard-normal coefficients, optionally rescaled."""
    return Octonion(rng.standard_normal(8) * scale)


def random_unit_octonion(rng: np.random.Generator) -> Octonion:
    v = rng.standard_normal(8)
    return Octonion(v / onorm(v))


def random_imaginary_unit(rng: np.random.Generator) -> Octonion:
    v = rng.standard_normal(8)
    v[0] = 0.0
    return Octonion(v / onorm(v))
