"""Cayley spinors, the octonionic Dirac equation, and p-square decomposition.

A :class:`CayleySpinor` is a 3-component octonionic column (theta1, theta2,
conj(xi)).  Its square is the Hermitian rank-1-style matrix

    [[theta theta^dagger, theta xi], [(theta xi)^dagger, |xi|^2]]

The momentum-space Dirac equation is trace_reversal(P) psi = 0 for a 2x2
Hermitian P; its solutions are P = +-theta theta^dagger, psi = theta xi
with theta in the complex subalgebra of P.  For spinors whose components
lie in an associative (at most quaternionic) subalgebra this is equivalent
to the vanishing of the Freudenthal square of the 3x3 square, and the
trace-1 idempotents of H3(O) are exactly the normalized quaternionic
squares.

psquare_decompose splits any Jordan matrix into eigenmatrix projections
A = sum lambda_i P_i with P_i o P_j = 0; the class p counts nonzero
eigenvalues and is read off the determinant / second-invariant / trace
cascade, which every determinant-preserving transformation leaves fixed.
"""

from __future__ import annotations

import numpy as np

from .jordan import (
    Hermitian2,
    JordanMatrix,
    block_split,
    det3,
    eigenvalues,
    freudenthal,
    jordan_product,
    sigma,
)
from .octonion import _as_coeffs, oconj, omul, onorm, subalgebra_dimension
from .transform import NestedMap


class CayleySpinor:
    """Two-component spinor plus an octonionic scalar, as one column."""

    __slots__ = ("theta", "xi")

    def __init__(self, theta, xi):
        th = np.array(theta, dtype=float).reshape(2, 8)
        th.setflags(write=False)
        x = np.array(_as_coeffs(xi))
        x.setflags(write=False)
        self.theta = th
        self.xi = x

    @classmethod
    def from_octonions(cls, theta1, theta2, xi) -> "CayleySpinor":
        return cls(np.stack([_as_coeffs(theta1), _as_coeffs(theta2)]), xi)

    @property
    def norm_sq(self) -> float:
        """theta^dagger theta + |xi|^2, the trace of the square."""
        return float(np.sum(self.theta**2) + self.xi @ self.xi)

    def column(self) -> np.ndarray:
        """The (3, 8) column (theta1, theta2, conj(xi))."""
        return np.vstack([self.theta, oconj(self.xi)[None, :]])

    def square(self) -> JordanMatrix:
        """The Hermitian square Psi Psi^dagger."""
        th1, th2, xi = self.theta[0], self.theta[1], self.xi
        return JordanMatrix(
            float(th1 @ th1),
            float(th2 @ th2),
            float(xi @ xi),
            a=omul(th2, oconj(th1)),
            b=oconj(omul(th2, xi)),
            c=omul(th1, xi),
        )

    def subalgebra_dim(self, tol: float = 1e-9) -> int:
        """Dimension of the subalgebra generated by the three components."""
        return subalgebra_dimension([self.theta[0], self.theta[1], self.xi], tol)

    def __repr__(self):
        return f"CayleySpinor(norm_sq={self.norm_sq:g})"


# ---------------------------------------------------------------------------
# Dirac machinery
# ---------------------------------------------------------------------------

def trace_reversal(P: Hermitian2) -> Hermitian2:
    """P - tr(P) I; reverses the trace and is an involution."""
    t = P.trace
    return Hermitian2(P.x1 - t, P.x2 - t, P.a)


def dirac_residual(P: Hermitian2, psi) -> float:
    """Norm of trace_reversal(P) psi for a 2-component spinor psi."""
    psi = np.asarray(psi, dtype=float).reshape(2, 8)
    Pt = trace_reversal(P)
    top = Pt.x1 * psi[0] + omul(oconj(Pt.a), psi[1])
    bottom = omul(Pt.a, psi[0]) + Pt.x2 * psi[1]
    return float(np.sqrt(np.sum(top**2) + np.sum(bottom**2)))


def dirac_solve(P: Hermitian2, tol: float = 1e-9) -> np.ndarray:
    """Factor a null 2x2 momentum as theta theta^dagger = sign(tr P) P.

    Requires det(P) = 0 and P != 0.  The returned theta lies in the complex
    subalgebra of P's off-diagonal entry; the gauge is fixed by rotating
    the first nonzero component real and nonnegative with a right phase.
    """
    scale = P.norm
    if scale <= tol:
        raise ValueError("dirac_solve requires a nonzero momentum")
    if abs(P.det) > tol * max(1.0, scale**2):
        raise ValueError(f"no rank-1 factorization: det(P) = {P.det:g} is not 0")
    sign = 1.0 if P.trace > 0 else -1.0
    q1, q2 = sign * P.x1, sign * P.x2
    a = sign * P.a
    if q1 >= q2:
        t1 = np.zeros(8)
        t1[0] = np.sqrt(max(q1, 0.0))
        t2 = a / t1[0]
    else:
        t2 = np.zeros(8)
        t2[0] = np.sqrt(max(q2, 0.0))
        t1 = oconj(a) / t2[0]
    theta = np.stack([t1, t2])
    # right phase in the shared complex subalgebra: first nonzero entry >= 0
    for comp in theta:
        nrm = float(onorm(comp))
        if nrm > tol * scale:
            w = oconj(comp) / nrm
            theta = np.stack([omul(theta[0], w), omul(theta[1], w)])
            break
    return theta


def dirac_equiv_check(psi: CayleySpinor) -> tuple[float, float]:
    """(Freudenthal-square norm, 2x2 Dirac residual) of a spinor's square.

    Both vanish exactly when the spinor's components stay inside an
    associative subalgebra.
    """
    square = psi.square()
    freud = freudenthal(square, square)
    P, spinor, _ = block_split(square)
    return freud.norm, dirac_residual(P, spinor)


def cayley_plane_check(P: JordanMatrix, tol: float = 1e-9) -> bool:
    """Whether P o P = P and tr P = 1, i.e. P is a trace-1 idempotent."""
    idem = (jordan_product(P, P) - P).norm
    return idem <= tol * max(1.0, P.norm**2) and abs(P.trace - 1.0) <= tol


# ---------------------------------------------------------------------------
# p-square decomposition and classification
# ---------------------------------------------------------------------------

class PSquareDecomposition:
    """Eigenmatrix decomposition A = sum lambda_i P_i with P_i o P_j = 0."""

    __slots__ = ("terms", "p")

    def __init__(self, terms, p: int):
        self.terms = tuple((float(lam), proj) for lam, proj in terms)
        self.p = int(p)

    @property
    def lambdas(self) -> np.ndarray:
        return np.array([lam for lam, _ in self.terms])

    @property
    def projectors(self) -> tuple[JordanMatrix, ...]:
        return tuple(proj for _, proj in self.terms)

    def reconstruct(self) -> JordanMatrix:
        out = JordanMatrix.zero()
        for lam, proj in self.terms:
            out = out + proj * lam
        return out

    def __repr__(self):
        lams = ", ".join(f"{lam:g}" for lam in self.lambdas)
        return f"PSquareDecomposition(lambdas=[{lams}], p={self.p})"


def _nonzero_count(lams, scale: float) -> int:
    return int(sum(1 for lam in lams if abs(lam) > 1e-8 * max(1.0, scale)))


def psquare_decompose(A: JordanMatrix, merge_tol: float = 1e-7) -> PSquareDecomposition:
    """Decompose A into eigenmatrix projections via Lagrange interpolation.

    Distinct eigenvalues give primitive trace-1 projections from the
    quadratic interpolant in Jordan powers.  Eigenvalues that agree within
    merge_tol * scale are merged: the linear interpolant on the distinct
    values yields the (non-primitive) group projection, except that a
    numerically diagonal A is split directly into its diagonal idempotents.
    """
    lams = eigenvalues(A)
    scale = max(1.0, A.norm)
    off_norm = max(float(onorm(A.a)), float(onorm(A.b)), float(onorm(A.c)))
    if off_norm <= 1e-12 * scale:
        # diagonal: idempotents can be read off directly, even when degenerate
        diag = (A.p, A.m, A.n)
        order = np.argsort(diag)[::-1]
        terms = [(diag[t], JordanMatrix.basis_element(int(t))) for t in order]
        return PSquareDecomposition(terms, _nonzero_count([d for d, _ in terms], scale))

    identity = JordanMatrix.identity()
    tol = merge_tol * scale
    clusters: list[list[float]] = [[lams[0]]]
    for lam in lams[1:]:
        if abs(lam - clusters[-1][-1]) <= tol:
            clusters[-1].append(lam)
        else:
            clusters.append([lam])

    if len(clusters) == 1:
        # triple eigenvalue: A is lambda I up to tolerance
        return PSquareDecomposition(
            [(float(np.mean(clusters[0])), identity)],
            _nonzero_count([np.mean(clusters[0])], scale),
        )

    if len(clusters) == 2:
        mu = float(np.mean(clusters[0]))
        nu = float(np.mean(clusters[1]))
        p_mu = (A - identity * nu) * (1.0 / (mu - nu))
        p_nu = (A - identity * mu) * (1.0 / (nu - mu))
        lams_mult = [mu] * len(clusters[0]) + [nu] * len(clusters[1])
        terms = [(mu, p_mu), (nu, p_nu)]
        return PSquareDecomposition(terms, _nonzero_count(lams_mult, scale))

    A2 = jordan_product(A, A)
    terms = []
    for idx in range(3):
        lam = lams[idx]
        others = [lams[t] for t in range(3) if t != idx]
        numer = A2 - A * (others[0] + others[1]) + identity * (others[0] * others[1])
        proj = numer * (1.0 / ((lam - others[0]) * (lam - others[1])))
        terms.append((lam, proj))
    return PSquareDecomposition(terms, _nonzero_count(lams, scale))


def classify(A: JordanMatrix) -> int:
    """Number of nonzero eigenvalues via the det / sigma / trace cascade.

    Thresholds scale with the homogeneity degree of each invariant.
    """
    scale = A.norm
    if scale == 0.0:
        return 0
    if abs(det3(A)) > 1e-8 * scale**3:
        return 3
    if abs(sigma(A)) > 1e-8 * scale**2:
        return 2
    if abs(A.trace) > 1e-8 * scale:
        return 1
    return 0


def e6_preserves_class_check(nm: NestedMap, A: JordanMatrix) -> bool:
    """Whether a nested map leaves the p-square class of A unchanged."""
    return classify(nm.apply(A)) == classify(A)


# ---------------------------------------------------------------------------
# seeded sampling
# ---------------------------------------------------------------------------

def random_quaternionic_spinor(rng: np.random.Generator, scale: float = 1.0) -> CayleySpinor:
    """Components drawn in the quaternion subalgebra span{1, i, j, k}."""
    theta = np.zeros((2, 8))
    theta[:, :4] = rng.standard_normal((2, 4)) * scale
    xi = np.zeros(8)
    xi[:4] = rng.standard_normal(4) * scale
    return CayleySpinor(theta, xi)


def random_octonionic_spinor(rng: np.random.Generator, scale: float = 1.0) -> CayleySpinor:
    """Full-octonionic spinor; redrawn until the components generate all of O."""
    while True:
        psi = CayleySpinor(rng.standard_normal((2, 8)) * scale,
                           rng.standard_normal(8) * scale)
        if psi.subalgebra_dim() == 8:
            return psi
