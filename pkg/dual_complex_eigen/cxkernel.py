"""
Complex dense linear algebra used by the dual complex solvers.

Linear solves, rank and nullspace, eigenvalues, polynomial determinants of
pencils and a tolerance-driven Jordan decomposition, all on plain complex
numpy arrays.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg
from numpy.polynomial import Polynomial

from dual_complex_eigen.config import get_tolerances
from dual_complex_eigen.errors import ConvergenceFailure, IllConditionedStructure, ShapeMismatch

logger = logging.getLogger(__name__)


def _as_matrix(M, name: str = "matrix") -> np.ndarray:
    M = np.asarray(M, dtype=np.complex128)
    if M.ndim != 2:
        raise ShapeMismatch(f"{name} must be 2-dimensional, got shape {M.shape}")
    return M


def _as_square(M, name: str = "matrix") -> np.ndarray:
    M = _as_matrix(M, name)
    if M.shape[0] != M.shape[1]:
        raise ShapeMismatch(f"{name} must be square, got shape {M.shape}")
    return M


def _svd_cutoff(singular_values: np.ndarray) -> float:
    tol = get_tolerances()
    top = float(singular_values[0]) if singular_values.size else 0.0
    return max(tol.rank * top, tol.abs)


def cx_rank(M) -> int:
    """
    Numerical rank: singular values above max(rank_tol * sigma_max, abs_tol).
    """
    M = _as_matrix(M)
    if M.size == 0:
        return 0
    s = scipy.linalg.svd(M, compute_uv=False)
    return int(np.sum(s > _svd_cutoff(s)))


def cx_nullspace(M) -> np.ndarray:
    """Orthonormal basis of the right nullspace, one vector per column."""
    M = _as_matrix(M)
    rows, cols = M.shape
    if M.size == 0:
        return np.eye(cols, dtype=np.complex128)
    _, s, vh = scipy.linalg.svd(M, full_matrices=True)
    rank = int(np.sum(s > _svd_cutoff(s)))
    return vh[rank:].conj().T


class SolveKind(str, Enum):
    UNIQUE = "unique"
    AFFINE = "affine"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class SolveResult:
    """
    Outcome of cx_solve.

    For UNIQUE and AFFINE the particular solution satisfies M x = b; the AFFINE
    family is particular + nullspace @ c for any c. For INCONSISTENT the
    particular solution is the least-squares minimizer and residual is its
    certificate.
    """

    kind: SolveKind
    particular: np.ndarray
    nullspace: np.ndarray
    residual: float
    threshold: float

    @property
    def consistent(self) -> bool:
        return self.kind is not SolveKind.INCONSISTENT


def cx_solve(M, b) -> SolveResult:
    """
    Solve M x = b for rectangular complex M.

    The rank-truncated SVD solution is accepted when its residual is at most
    abs_tol * (1 + ||b|| + ||M|| ||x||).
    """
    M = _as_matrix(M)
    b = np.asarray(b, dtype=np.complex128).reshape(-1)
    rows, cols = M.shape
    if b.shape[0] != rows:
        raise ShapeMismatch(f"Right-hand side has length {b.shape[0]}, matrix has {rows} rows")
    tol = get_tolerances()
    if M.size == 0:
        x = np.zeros(cols, dtype=np.complex128)
        null = np.eye(cols, dtype=np.complex128)
    else:
        u, s, vh = scipy.linalg.svd(M, full_matrices=True)
        rank = int(np.sum(s > _svd_cutoff(s)))
        coeffs = (u[:, :rank].conj().T @ b) / s[:rank]
        x = vh[:rank].conj().T @ coeffs
        null = vh[rank:].conj().T
    residual = float(np.linalg.norm(M @ x - b)) if rows else 0.0
    threshold = tol.abs * (1.0 + np.linalg.norm(b) + np.linalg.norm(M) * np.linalg.norm(x))
    if residual > threshold:
        kind = SolveKind.INCONSISTENT
    elif null.shape[1] == 0:
        kind = SolveKind.UNIQUE
    else:
        kind = SolveKind.AFFINE
    return SolveResult(kind, x, null, residual, float(threshold))


def cx_span_membership(v, M) -> bool:
    """True iff v lies in the column span of M."""
    M = _as_matrix(M)
    v = np.asarray(v, dtype=np.complex128).reshape(-1)
    if v.shape[0] != M.shape[0]:
        raise ShapeMismatch(f"Vector of length {v.shape[0]} against {M.shape[0]}-row matrix")
    return cx_solve(M, v).consistent


def lexicographic_key(z: complex, digits: int = 8) -> Tuple[float, float]:
    """Sort key on (re, im), rounded so roundoff does not reorder equal parts."""
    return (round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0)


@dataclass(frozen=True)
class EigenDecomposition:
    values: np.ndarray
    vectors: np.ndarray


def cx_eig(M) -> EigenDecomposition:
    """
    Eigenvalues (repeated per algebraic multiplicity) and unit eigenvectors.

    Pairs are returned in lexicographic order of the eigenvalue.

    Raises:
        ConvergenceFailure: if LAPACK does not converge.
    """
    M = _as_square(M)
    try:
        values, vectors = scipy.linalg.eig(M)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise ConvergenceFailure(f"Eigenvalue iteration failed: {e}") from e
    if not np.all(np.isfinite(values)):
        raise ConvergenceFailure("Eigenvalue iteration produced non-finite values")
    order = sorted(range(len(values)), key=lambda i: lexicographic_key(complex(values[i])))
    vectors = vectors[:, order]
    vectors = vectors / np.linalg.norm(vectors, axis=0, keepdims=True)
    return EigenDecomposition(values[order], vectors)


@dataclass(frozen=True)
class PolyDet:
    """det(lambda M1 + M0) sampled on a scaled circle and interpolated."""

    coefficients: np.ndarray
    identically_zero: bool
    nodes: np.ndarray
    values: np.ndarray

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial(self.coefficients)

    @property
    def degree(self) -> int:
        if self.identically_zero:
            return -1
        return len(self.coefficients) - 1

    def __call__(self, lam: complex) -> complex:
        return complex(self.polynomial(lam))


def cx_poly_det(M0, M1) -> PolyDet:
    """
    Coefficients of p(l) = det(l M1 + M0), ascending powers.

    p is sampled at m + 1 nodes r w^k (w a primitive (m+1)-th root of unity,
    r = 1 + ||M0|| + ||M1||) and interpolated with an FFT. p is identically zero when
    the sampled matrix is rank deficient (cx_rank) at every node: a nonzero
    polynomial of degree <= m cannot vanish at m + 1 distinct points.
    """
    M0 = _as_square(M0, "M0")
    M1 = _as_square(M1, "M1")
    if M0.shape != M1.shape:
        raise ShapeMismatch(f"M0 {M0.shape} and M1 {M1.shape} differ in shape")
    tol = get_tolerances()
    m = M0.shape[0]
    if m == 0:
        one = np.array([1.0 + 0j])
        return PolyDet(one, False, np.array([0j]), one)

    radius = 1.0 + np.linalg.norm(M0) + np.linalg.norm(M1)
    k = np.arange(m + 1)
    nodes = radius * np.exp(2j * np.pi * k / (m + 1))
    values = np.empty(m + 1, dtype=np.complex128)
    bounds = np.empty(m + 1)
    deficient = np.empty(m + 1, dtype=bool)
    for i, node in enumerate(nodes):
        pencil = node * M1 + M0
        values[i] = np.linalg.det(pencil)
        bounds[i] = max(1.0, float(np.prod(np.linalg.norm(pencil, axis=1))))
        deficient[i] = cx_rank(pencil) < m

    if np.all(deficient):
        logger.debug("Pencil determinant vanishes at all %d nodes", m + 1)
        return PolyDet(np.zeros(1, dtype=np.complex128), True, nodes, values)

    scaled = np.fft.fft(values) / (m + 1)
    coefficients = scaled / radius ** k
    noise = tol.rank * float(np.max(bounds))
    # r^j |c_j| is the size of the degree-j term on the sampling circle
    significant = np.abs(scaled) > noise
    if not np.any(significant):
        significant[0] = True
    degree = int(np.max(np.nonzero(significant)[0]))
    coefficients = np.where(significant, coefficients, 0.0)[: degree + 1]
    return PolyDet(coefficients, False, nodes, values)


def jordan_block(size: int, lam: complex) -> np.ndarray:
    """J_size(lam): lam on the diagonal, ones on the superdiagonal."""
    return lam * np.eye(size, dtype=np.complex128) + np.eye(size, k=1, dtype=np.complex128)


@dataclass(frozen=True)
class BlockStructure:
    """
    Jordan structure of one eigenvalue: n0 blocks of size 1 followed by blocks
    of the given sizes (each >= 2, nonincreasing).
    """

    n0: int
    sizes: Tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return self.n0 + sum(self.sizes)

    @property
    def t(self) -> int:
        return len(self.sizes)

    def block_sizes(self) -> List[int]:
        return [1] * self.n0 + list(self.sizes)

    def canonical(self, lam: complex) -> np.ndarray:
        """K(lam; n0, n1, ..., nt) = diag(lam I_n0, J_n1(lam), ..., J_nt(lam))."""
        blocks = [jordan_block(s, lam) for s in self.block_sizes()]
        return scipy.linalg.block_diag(*blocks).astype(np.complex128) if blocks else np.zeros((0, 0), complex)

    def to_json(self):
        return {"n0": self.n0, "sizes": list(self.sizes)}


@dataclass(frozen=True)
class JordanStructure:
    """Q^{-1} M Q = diag(K(l_1; ...), ..., K(l_p; ...))."""

    transform: np.ndarray
    eigenvalues: List[complex]
    blocks: List[BlockStructure]
    residual: float = field(default=0.0, compare=False)

    @property
    def n(self) -> int:
        return self.transform.shape[0]

    def offsets(self) -> List[int]:
        """Starting row of each eigenvalue's diagonal block."""
        out, start = [], 0
        for b in self.blocks:
            out.append(start)
            start += b.size
        return out

    def canonical_matrix(self) -> np.ndarray:
        parts = [b.canonical(lam) for lam, b in zip(self.eigenvalues, self.blocks)]
        return scipy.linalg.block_diag(*parts).astype(np.complex128)

    def is_diagonalizable(self) -> bool:
        return all(not b.sizes for b in self.blocks)

    def is_single_jordan_block(self) -> bool:
        return len(self.blocks) == 1 and self.blocks[0].n0 == 0 and len(self.blocks[0].sizes) == 1


def _eigenvalue_estimates(M: np.ndarray) -> np.ndarray:
    if not np.any(np.tril(M, -1)):
        return np.diag(M).copy()
    try:
        T, _ = scipy.linalg.schur(M, output="complex")
    except (np.linalg.LinAlgError, ValueError) as e:
        raise ConvergenceFailure(f"Schur decomposition failed: {e}") from e
    return np.diag(T).copy()


def _cluster(values: np.ndarray, radius: float) -> List[Tuple[complex, int]]:
    """Single-linkage clusters within radius, as (mean, multiplicity)."""
    n = len(values)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= radius:
                parent[find(i)] = find(j)

    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(values[i])
    clusters = [(complex(np.mean(g)), len(g)) for g in groups.values()]
    clusters.sort(key=lambda c: lexicographic_key(c[0]))
    return clusters


def cluster_eigenvalues(values, scale: float = 1.0) -> List[Tuple[complex, int]]:
    """Group nearly equal eigenvalues; radius is cluster_tol * max(scale, 1)."""
    radius = get_tolerances().cluster * max(scale, 1.0)
    return _cluster(np.asarray(values, dtype=np.complex128), radius)


def _normalize_phase(v: np.ndarray) -> np.ndarray:
    v = v / np.linalg.norm(v)
    lead = v[int(np.argmax(np.abs(v)))]
    return v * (abs(lead) / lead)


def _orth(columns: List[np.ndarray], n: int) -> np.ndarray:
    if not columns:
        return np.zeros((n, 0), dtype=np.complex128)
    return scipy.linalg.orth(np.column_stack(columns))


def _chains_for(M: np.ndarray, lam: complex, multiplicity: int) -> Tuple[BlockStructure, List[np.ndarray]]:
    n = M.shape[0]
    N = M - lam * np.eye(n)
    powers = [np.eye(n, dtype=np.complex128)]
    nullities = [0]
    while nullities[-1] < multiplicity and len(powers) <= multiplicity:
        powers.append(powers[-1] @ N)
        nullities.append(n - cx_rank(powers[-1]))
    if nullities[-1] != multiplicity:
        raise IllConditionedStructure(
            f"Eigenvalue {lam:.6g} has algebraic multiplicity {multiplicity} but generalized "
            f"eigenspace dimension {nullities[-1]} at the active tolerances"
        )
    depth = len(nullities) - 1
    at_least = [0] + [nullities[k] - nullities[k - 1] for k in range(1, depth + 1)] + [0]
    exactly = {k: at_least[k] - at_least[k + 1] for k in range(1, depth + 1)}
    logger.debug("Eigenvalue %s: nullities %s, block counts %s", lam, nullities[1:], exactly)

    kernels = [np.zeros((n, 0), dtype=np.complex128)]
    for k in range(1, depth + 1):
        kernels.append(cx_nullspace(powers[k]))

    heads: List[Tuple[np.ndarray, int]] = []
    for k in range(depth, 0, -1):
        if exactly[k] == 0:
            continue
        covered = [np.linalg.matrix_power(N, length - k) @ v for v, length in heads if length > k]
        occupied = _orth([kernels[k - 1][:, j] for j in range(kernels[k - 1].shape[1])] + covered, n)
        projector = kernels[k] @ kernels[k].conj().T
        residual = projector - occupied @ (occupied.conj().T @ projector)
        _, _, pivots = scipy.linalg.qr(residual, pivoting=True, mode="economic")
        picks = sorted(pivots[: exactly[k]])
        q, r = np.linalg.qr(residual[:, picks])
        if np.min(np.abs(np.diag(r))) <= get_tolerances().rank * max(1.0, np.linalg.norm(residual)):
            raise IllConditionedStructure(
                f"Could not extend Jordan chains of length {k} for eigenvalue {lam:.6g}"
            )
        for j in range(len(picks)):
            heads.append((_normalize_phase(q[:, j]), k))

    chains = {}
    for v, length in heads:
        chain = [np.linalg.matrix_power(N, length - 1 - j) @ v for j in range(length)]
        chains.setdefault(length, []).append(chain)

    ordered: List[np.ndarray] = []
    for chain in chains.get(1, []):
        ordered.extend(chain)
    for length in sorted((s for s in chains if s >= 2), reverse=True):
        for chain in chains[length]:
            ordered.extend(chain)
    sizes = tuple(sorted((s for s in chains if s >= 2 for _ in chains[s]), reverse=True))
    return BlockStructure(n0=len(chains.get(1, [])), sizes=sizes), ordered


def cx_jordan(M) -> JordanStructure:
    """
    Jordan decomposition Q^{-1} M Q = K of a square complex matrix.

    Eigenvalues come from the Schur form (or the diagonal of a triangular
    input) and are merged by single-linkage clustering. Block sizes follow from
    the nullities of (M - l I)^k and the transform from Jordan chains. Within an
    eigenvalue the 1x1 blocks come first, then the larger blocks by
    nonincreasing size; eigenvalues are ordered lexicographically by (re, im).

    Raises:
        ConvergenceFailure: if the Schur iteration fails.
        IllConditionedStructure: if the clustered structure cannot be certified.
    """
    M = _as_square(M)
    n = M.shape[0]
    tol = get_tolerances()
    scale = max(float(np.linalg.norm(M)), 1.0)
    clusters = cluster_eigenvalues(_eigenvalue_estimates(M), scale)
    logger.debug("cx_jordan: %d distinct eigenvalue(s) for n=%d", len(clusters), n)

    eigenvalues, blocks, columns = [], [], []
    for lam, multiplicity in clusters:
        structure, chain_columns = _chains_for(M, lam, multiplicity)
        eigenvalues.append(lam)
        blocks.append(structure)
        columns.extend(chain_columns)

    Q = np.column_stack(columns)
    if cx_rank(Q) < n:
        raise IllConditionedStructure("Jordan transform is numerically singular")
    structure = JordanStructure(Q, eigenvalues, blocks)
    K = structure.canonical_matrix()
    residual = float(np.linalg.norm(np.linalg.solve(Q, M @ Q) - K))
    if residual > tol.jordan * scale:
        raise IllConditionedStructure(
            f"Jordan reconstruction residual {residual:.3e} exceeds {tol.jordan * scale:.3e}"
        )
    return JordanStructure(Q, eigenvalues, blocks, residual)
