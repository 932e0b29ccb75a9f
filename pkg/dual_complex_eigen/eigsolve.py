"""
Eigenvalues of dual complex matrices.

A dual complex matrix can have finitely many eigenvalues, none at all, or a
whole family lambda_s + lambda_d eps with lambda_d free. This module decides
which regime applies for every standard eigenvalue and reconstructs verified
eigenvectors:

    eig_at              test one eigenpair candidate of the standard part
    eig_all             classify every standard eigenvalue of a square matrix
    is_diagonalizable   decide similarity to a diagonal matrix, with certificate
    hermitian_eig       dual number eigenvalues of a Hermitian matrix
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from dual_complex_eigen.config import get_tolerances
from dual_complex_eigen.cxkernel import (
    BlockStructure,
    PolyDet,
    cluster_eigenvalues,
    cx_jordan,
    cx_nullspace,
    cx_poly_det,
    cx_rank,
    cx_solve,
    cx_span_membership,
)
from dual_complex_eigen.dcmat import (
    DCMatrix,
    DCVector,
    appreciably_linearly_independent,
    diag,
    from_columns,
    is_hermitian,
    mat_inverse,
    mat_mul,
    mat_sub,
    verify_eigenpair_detail,
)
from dual_complex_eigen.dcnum import DualComplex, DualNumber, Ordering, dn_compare, format_complex
from dual_complex_eigen.errors import (
    BadBlockStructure,
    DualComplexError,
    IllConditionedStructure,
    NotAnEigenpair,
    NotHermitian,
    ShapeMismatch,
)

logger = logging.getLogger(__name__)

# lambda_d values at which an infinite family is spot-checked
FAMILY_SAMPLES = (0j, 1 + 0j, 1 + 1j)


class Regime(str, Enum):
    FINITE = "finite"
    NONE = "none"
    INFINITE = "infinite"


@dataclass(frozen=True)
class Eigenpair:
    value: DualComplex
    vector: DCVector
    multiplicity: int = 1

    def to_json(self) -> Dict[str, Any]:
        return {
            "lambda": self.value.to_json(),
            "vector": self.vector.to_json(),
            "multiplicity": self.multiplicity,
        }


def normalize_eigenvector(x: DCVector) -> DCVector:
    """Scale so ||x_s|| = 1 and the first appreciable entry of x_s is real positive."""
    tol = get_tolerances()
    mags = np.abs(x.std)
    norm = float(np.linalg.norm(x.std))
    if norm <= tol.abs:
        raise IllConditionedStructure("Eigenvector candidate is not appreciable")
    cutoff = max(tol.abs, tol.rank * float(mags.max()))
    lead = x.std[int(np.argmax(mags > cutoff))]
    c = (abs(lead) / lead) / norm
    return DCVector(c * x.std, c * x.dual)


def checked_eigenpair(A: DCMatrix, value: DualComplex, vector: DCVector, multiplicity: int = 1) -> Eigenpair:
    check = verify_eigenpair_detail(A, value, vector)
    if not check.ok:
        raise IllConditionedStructure(
            f"Reconstructed eigenpair for {value} failed verification: {check.describe()}"
        )
    return Eigenpair(value, vector, multiplicity)


# ---------------------------------------------------------------------------
# Single candidate test
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniqueSolution:
    """Exactly one lambda_d makes (lambda_s, x_s) extend to an eigenpair."""

    lambda_s: complex
    lambda_d: complex
    x_s: np.ndarray
    x_d: np.ndarray
    regime: Regime = field(default=Regime.FINITE, init=False)

    def eigenpair(self) -> Tuple[DualComplex, DCVector]:
        return DualComplex(self.lambda_s, self.lambda_d), DCVector(self.x_s, self.x_d)


@dataclass(frozen=True)
class InfiniteSolution:
    """Every lambda_d extends (lambda_s, x_s) to an eigenpair."""

    matrix: DCMatrix = field(repr=False)
    lambda_s: complex
    x_s: np.ndarray
    regime: Regime = field(default=Regime.INFINITE, init=False)

    def eigenpair(self, lambda_d: complex) -> Tuple[DualComplex, DCVector]:
        A = self.matrix
        shifted = A.std - self.lambda_s * np.eye(A.rows)
        rhs = lambda_d * self.x_s - A.dual @ self.x_s
        solution = cx_solve(shifted, rhs)
        if not solution.consistent:
            raise IllConditionedStructure(f"No dual part found for lambda_d = {format_complex(lambda_d)}")
        return DualComplex(self.lambda_s, lambda_d), DCVector(self.x_s, solution.particular)


@dataclass(frozen=True)
class NoSolution:
    """A_d x_s lies outside Span(A_s - lambda_s I | x_s); residual is the certificate."""

    lambda_s: complex
    x_s: np.ndarray
    residual: float
    threshold: float
    regime: Regime = field(default=Regime.NONE, init=False)


EigAtResult = Union[UniqueSolution, InfiniteSolution, NoSolution]


def eig_at(A: DCMatrix, lambda_s: complex, x_s) -> EigAtResult:
    """
    Decide whether an eigenpair (lambda_s, x_s) of A_s extends to eigenpairs of A.

    Writing Q = (A_s - lambda_s I | x_s), an extension exists iff A_d x_s lies in
    Span(Q). It is unique iff additionally x_s is outside Span(A_s - lambda_s I);
    otherwise lambda_d can be any complex number. Solutions come from
    Q z = -A_d x_s with z = (x_d; -lambda_d).

    Raises:
        NotAnEigenpair: if A_s x_s != lambda_s x_s or x_s vanishes.
    """
    if not A.is_square:
        raise ShapeMismatch(f"Eigenvalues need a square matrix, got {A.shape}")
    x_s = np.asarray(x_s, dtype=np.complex128).reshape(-1)
    if x_s.shape[0] != A.rows:
        raise ShapeMismatch(f"Vector of length {x_s.shape[0]} for a {A.rows}x{A.rows} matrix")
    tol = get_tolerances()
    lambda_s = complex(lambda_s)
    norm = float(np.linalg.norm(x_s))
    if norm <= tol.abs:
        raise NotAnEigenpair("x_s is zero")
    shifted = A.std - lambda_s * np.eye(A.rows)
    residual = float(np.linalg.norm(shifted @ x_s))
    if residual > tol.eig * (1.0 + np.linalg.norm(A.std)) * norm:
        raise NotAnEigenpair(f"A_s x_s - lambda_s x_s has norm {residual:.3e}")

    Q = np.column_stack([shifted, x_s])
    solution = cx_solve(Q, -A.dual @ x_s)
    if not solution.consistent:
        logger.debug("eig_at: A_d x_s outside Span(Q), residual %.3e", solution.residual)
        return NoSolution(lambda_s, x_s, solution.residual, solution.threshold)
    if cx_span_membership(x_s, shifted):
        return InfiniteSolution(A, lambda_s, x_s)
    z = solution.particular
    return UniqueSolution(lambda_s, complex(-z[-1]), x_s, z[:-1])


# ---------------------------------------------------------------------------
# Structured pencil for one standard eigenvalue
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructuredPencil:
    """
    C = W^T A_d Z for one standard eigenvalue with Jordan structure (n0; n_1..n_t).

    Z selects e_1..e_n0 and the first column of every larger Jordan block, W the
    same scalar coordinates and the last row of every larger block.
    """

    n0: int
    t: int
    C: np.ndarray
    Z: np.ndarray
    W: np.ndarray

    @property
    def C00(self) -> np.ndarray:
        return self.C[: self.n0, : self.n0]

    @property
    def C01(self) -> np.ndarray:
        return self.C[: self.n0, self.n0 :]

    @property
    def C10(self) -> np.ndarray:
        return self.C[self.n0 :, : self.n0]

    @property
    def C11(self) -> np.ndarray:
        return self.C[self.n0 :, self.n0 :]

    @property
    def size(self) -> int:
        return self.n0 + self.t

    def leading(self) -> np.ndarray:
        """diag(I_n0, 0_t), the coefficient of lambda_d in M."""
        return np.diag(np.r_[np.ones(self.n0), np.zeros(self.t)]).astype(np.complex128)

    def matrix(self, lambda_d: complex) -> np.ndarray:
        """M(lambda_d) = [[lambda_d I - C00, -C01], [-C10, -C11]]."""
        return lambda_d * self.leading() - self.C

    @classmethod
    def from_matrix(cls, C, n0: int) -> "StructuredPencil":
        """Pencil with identity selectors, for working with C directly."""
        C = np.asarray(C, dtype=np.complex128)
        if C.ndim != 2 or C.shape[0] != C.shape[1] or not 0 <= n0 <= C.shape[0]:
            raise BadBlockStructure(f"Cannot split a {C.shape} matrix at n0={n0}")
        eye = np.eye(C.shape[0], dtype=np.complex128)
        return cls(n0, C.shape[0] - n0, C, eye, eye)


def build_structured_pencil(A_d, blocks: BlockStructure) -> StructuredPencil:
    """
    Raises:
        BadBlockStructure: if a Jordan block has size < 2 or the sizes do not add up to n.
    """
    A_d = np.asarray(A_d, dtype=np.complex128)
    if A_d.ndim != 2 or A_d.shape[0] != A_d.shape[1]:
        raise ShapeMismatch(f"Dual block must be square, got shape {A_d.shape}")
    n = A_d.shape[0]
    if blocks.n0 < 0 or any(size < 2 for size in blocks.sizes):
        raise BadBlockStructure(f"Invalid block sizes n0={blocks.n0}, {list(blocks.sizes)}")
    if blocks.size != n:
        raise BadBlockStructure(f"Block sizes add up to {blocks.size}, matrix has order {n}")

    firsts, lasts = list(range(blocks.n0)), list(range(blocks.n0))
    start = blocks.n0
    for size in blocks.sizes:
        firsts.append(start)
        lasts.append(start + size - 1)
        start += size
    eye = np.eye(n, dtype=np.complex128)
    C = A_d[np.ix_(lasts, firsts)]
    return StructuredPencil(blocks.n0, blocks.t, C, eye[:, firsts], eye[:, lasts])


@dataclass(frozen=True)
class PencilRoot:
    lambda_d: complex
    kernel: np.ndarray
    multiplicity: int


@dataclass(frozen=True)
class PencilSolution:
    regime: Regime
    roots: Tuple[PencilRoot, ...]
    poly: PolyDet


def _smallest_singular_vector(M: np.ndarray) -> np.ndarray:
    _, _, vh = scipy.linalg.svd(M)
    return vh[-1].conj().reshape(-1, 1)


def _kernel(pencil: StructuredPencil, lambda_d: complex, limit: Optional[int] = None) -> np.ndarray:
    M = pencil.matrix(lambda_d)
    kernel = cx_nullspace(M)
    if kernel.shape[1] == 0:
        kernel = _smallest_singular_vector(M)
    return kernel if limit is None else kernel[:, :limit]


def _finite_roots(pencil: StructuredPencil, poly: PolyDet) -> np.ndarray:
    if pencil.t == 0:
        return scipy.linalg.eigvals(pencil.C00)
    if cx_rank(pencil.C11) == pencil.t:
        schur = pencil.C00 - pencil.C01 @ scipy.linalg.solve(pencil.C11, pencil.C10)
        roots = scipy.linalg.eigvals(schur) if pencil.n0 else np.zeros(0, dtype=np.complex128)
        if poly.degree == len(roots) and len(roots):
            poly_roots = poly.polynomial.roots()
            gap = max(float(np.min(np.abs(poly_roots - r))) / (1.0 + abs(r)) for r in roots)
            if gap > 1e-6:
                logger.warning("Schur complement and determinant roots disagree by %.3e", gap)
        return roots
    alpha, beta = scipy.linalg.eig(pencil.C, pencil.leading(), right=False, homogeneous_eigvals=True)
    weight = np.abs(beta) / (np.abs(alpha) + np.abs(beta))
    keep = np.argsort(-weight, kind="stable")[: max(poly.degree, 0)]
    return alpha[keep] / beta[keep]


def structured_eigen_system(pencil: StructuredPencil) -> PencilSolution:
    """
    All lambda_d for which M(lambda_d) is singular, with kernel vectors y.

    p(l) = det M(l) identically zero means every lambda_d works; a nonzero
    constant means none does; otherwise the roots of p are the finite set.
    """
    poly = cx_poly_det(-pencil.C, pencil.leading())
    if poly.identically_zero:
        logger.debug("Pencil determinant vanishes identically: infinite family")
        return PencilSolution(Regime.INFINITE, (), poly)
    if poly.degree <= 0:
        logger.debug("Pencil determinant is the nonzero constant %s", poly.coefficients[0])
        return PencilSolution(Regime.NONE, (), poly)

    roots = _finite_roots(pencil, poly)
    scale = 1.0 + float(np.linalg.norm(pencil.C))
    found = []
    for lambda_d, multiplicity in cluster_eigenvalues(roots, scale):
        kernel = _kernel(pencil, lambda_d, multiplicity)
        found.append(PencilRoot(lambda_d, kernel, multiplicity))
    return PencilSolution(Regime.FINITE, tuple(found), poly)


# ---------------------------------------------------------------------------
# Full classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _JordanCoordinates:
    """Q^{-1} B Q = K + A_d eps, with K the canonical standard part."""

    Q: np.ndarray
    K: np.ndarray
    A_d: np.ndarray
    offsets: Tuple[int, ...]
    sizes: Tuple[int, ...]

    def block(self, i: int) -> slice:
        return slice(self.offsets[i], self.offsets[i] + self.sizes[i])

    def eigenvector(self, i: int, lambda_s: complex, lambda_d: complex, x_is: np.ndarray) -> DCVector:
        n = self.K.shape[0]
        own = self.block(i)
        x_s = np.zeros(n, dtype=np.complex128)
        x_d = np.zeros(n, dtype=np.complex128)
        x_s[own] = x_is
        K_i = self.K[own, own] - lambda_s * np.eye(self.sizes[i])
        x_d[own] = K_i.T @ (lambda_d * x_is - self.A_d[own, own] @ x_is)
        for k in range(len(self.sizes)):
            if k == i:
                continue
            other = self.block(k)
            K_k = self.K[other, other] - lambda_s * np.eye(self.sizes[k])
            x_d[other] = -scipy.linalg.solve_triangular(K_k, self.A_d[other, own] @ x_is)
        return normalize_eigenvector(DCVector(self.Q @ x_s, self.Q @ x_d))


@dataclass(frozen=True)
class FiniteEigenvalues:
    lambda_s: complex
    structure: BlockStructure
    eigenpairs: Tuple[Eigenpair, ...]
    regime: Regime = field(default=Regime.FINITE, init=False)


@dataclass(frozen=True)
class NoEigenvalue:
    """M(lambda_d) is nonsingular for every lambda_d: det M is the nonzero constant."""

    lambda_s: complex
    structure: BlockStructure
    determinant: complex
    sigma_min: float
    regime: Regime = field(default=Regime.NONE, init=False)


@dataclass(frozen=True)
class InfiniteFamily:
    """lambda_s + lambda_d eps is an eigenvalue for every complex lambda_d."""

    lambda_s: complex
    structure: BlockStructure
    representative: Eigenpair
    builder: Callable[[complex], DCVector] = field(repr=False, compare=False)
    matrix: DCMatrix = field(repr=False, compare=False)
    regime: Regime = field(default=Regime.INFINITE, init=False)

    def eigenpair(self, lambda_d: complex) -> Eigenpair:
        value = DualComplex(self.lambda_s, complex(lambda_d))
        return checked_eigenpair(self.matrix, value, self.builder(complex(lambda_d)))


EigenClass = Union[FiniteEigenvalues, NoEigenvalue, InfiniteFamily]


@dataclass(frozen=True)
class EigenReport:
    """Classification of every distinct standard eigenvalue, in lexicographic order."""

    n: int
    classes: Tuple[EigenClass, ...]

    @property
    def finite_count(self) -> int:
        return sum(len(c.eigenpairs) for c in self.classes if isinstance(c, FiniteEigenvalues))

    @property
    def any_infinite(self) -> bool:
        return any(c.regime is Regime.INFINITE for c in self.classes)

    @property
    def any_none(self) -> bool:
        return any(c.regime is Regime.NONE for c in self.classes)

    @property
    def regime(self) -> Regime:
        if self.any_infinite:
            return Regime.INFINITE
        return Regime.FINITE if self.finite_count else Regime.NONE

    def eigenpairs(self) -> List[Eigenpair]:
        return [p for c in self.classes if isinstance(c, FiniteEigenvalues) for p in c.eigenpairs]

    def finite_eigenvalues(self) -> List[DualComplex]:
        return [p.value for p in self.eigenpairs()]


def eig_all(B: DCMatrix) -> EigenReport:
    """
    Classify every eigenvalue of a square dual complex matrix.

    B_s is brought to Jordan form Q^{-1} B_s Q = K; for each distinct standard
    eigenvalue the structured pencil of its diagonal block of A_d = Q^{-1} B_d Q
    decides the regime, and eigenvectors are rebuilt in Jordan coordinates
    (including the parts on the other eigenvalues' blocks) and mapped back by Q.
    Every emitted pair passes verify_eigenpair.

    Raises:
        ConvergenceFailure, IllConditionedStructure: from the Jordan decomposition.
    """
    if not B.is_square:
        raise ShapeMismatch(f"Eigenvalues need a square matrix, got {B.shape}")
    structure = cx_jordan(B.std)
    Q = structure.transform
    coords = _JordanCoordinates(
        Q=Q,
        K=structure.canonical_matrix(),
        A_d=scipy.linalg.solve(Q, B.dual @ Q),
        offsets=tuple(structure.offsets()),
        sizes=tuple(b.size for b in structure.blocks),
    )

    classes: List[EigenClass] = []
    for i, (lambda_s, blocks) in enumerate(zip(structure.eigenvalues, structure.blocks)):
        own = coords.block(i)
        pencil = build_structured_pencil(coords.A_d[own, own], blocks)
        solution = structured_eigen_system(pencil)
        logger.debug(
            "Standard eigenvalue %s with blocks %s: %s", lambda_s, blocks.block_sizes(), solution.regime.value
        )

        if solution.regime is Regime.FINITE:
            pairs = []
            for root in solution.roots:
                value = DualComplex(lambda_s, root.lambda_d)
                for j in range(root.kernel.shape[1]):
                    x = coords.eigenvector(i, lambda_s, root.lambda_d, pencil.Z @ root.kernel[:, j])
                    pairs.append(checked_eigenpair(B, value, x, root.multiplicity))
            classes.append(FiniteEigenvalues(lambda_s, blocks, tuple(pairs)))
        elif solution.regime is Regime.NONE:
            sigma = float(scipy.linalg.svdvals(pencil.matrix(0j)).min())
            classes.append(NoEigenvalue(lambda_s, blocks, complex(solution.poly.coefficients[0]), sigma))
        else:
            classes.append(_infinite_family(B, coords, pencil, i, lambda_s, blocks))

    return EigenReport(B.rows, tuple(classes))


def _infinite_family(B, coords, pencil, i, lambda_s, blocks) -> InfiniteFamily:
    def builder(lambda_d: complex) -> DCVector:
        y = _kernel(pencil, lambda_d, 1)[:, 0]
        return coords.eigenvector(i, lambda_s, lambda_d, pencil.Z @ y)

    representative = checked_eigenpair(B, DualComplex(lambda_s, 0j), builder(0j))
    family = InfiniteFamily(lambda_s, blocks, representative, builder, B)
    for sample in FAMILY_SAMPLES[1:]:
        family.eigenpair(sample)
    return family


# ---------------------------------------------------------------------------
# Diagonalizability
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Diagonalization:
    """
    Verdict of is_diagonalizable. When diagonalizable, A = P D P^{-1} with the
    eigenvectors as the columns of P.
    """

    diagonalizable: bool
    reason: str
    report: EigenReport = field(repr=False)
    P: Optional[DCMatrix] = None
    D: Optional[DCMatrix] = None
    residual: Optional[float] = None

    def __bool__(self) -> bool:
        return self.diagonalizable


def _blockwise_verdict(A: DCMatrix) -> Optional[bool]:
    """B_s diagonalizable and every diagonal block of A_d (in its eigenbasis) diagonalizable."""
    try:
        structure = cx_jordan(A.std)
        if not structure.is_diagonalizable():
            return False
        Q = structure.transform
        A_d = scipy.linalg.solve(Q, A.dual @ Q)
        for start, blocks in zip(structure.offsets(), structure.blocks):
            own = slice(start, start + blocks.size)
            if not cx_jordan(A_d[own, own]).is_diagonalizable():
                return False
        return True
    except DualComplexError as e:
        logger.debug("Blockwise diagonalizability test skipped: %s", e)
        return None


def is_diagonalizable(A: DCMatrix) -> Diagonalization:
    """
    A is diagonalizable iff it has exactly n eigenvalues (counted once per
    independent eigenvector) whose eigenvectors are appreciably linearly
    independent.

    The verdict is checked against the blockwise test (A_s diagonalizable and
    each diagonal block of A_d in the eigenbasis of A_s diagonalizable).

    Raises:
        IllConditionedStructure: if the two tests disagree or the certificate
            residual is too large.
    """
    report = eig_all(A)
    n = A.rows
    pairs = report.eigenpairs()
    if report.any_infinite:
        verdict = Diagonalization(False, "infinitely many eigenvalues", report)
    elif len(pairs) != n:
        verdict = Diagonalization(False, f"{len(pairs)} eigenvalue(s) for order {n}", report)
    elif not appreciably_linearly_independent([p.vector for p in pairs]):
        verdict = Diagonalization(False, "eigenvectors are not appreciably linearly independent", report)
    else:
        P = from_columns([p.vector for p in pairs])
        D = diag([p.value for p in pairs])
        residual = mat_sub(mat_mul(mat_mul(P, D), mat_inverse(P)), A).norm()
        cond = float(np.linalg.cond(P.std))
        threshold = get_tolerances().residual * (1.0 + A.norm()) * cond
        if residual > threshold:
            raise IllConditionedStructure(f"Diagonalization residual {residual:.3e} exceeds {threshold:.3e}")
        verdict = Diagonalization(True, "n appreciably independent eigenvectors", report, P, D, residual)

    blockwise = _blockwise_verdict(A)
    if blockwise is not None and blockwise != verdict.diagonalizable:
        raise IllConditionedStructure(
            f"Blockwise Jordan test says diagonalizable={blockwise} but the eigenvector "
            f"count says {verdict.diagonalizable}"
        )
    return verdict


# ---------------------------------------------------------------------------
# Hermitian matrices
# ---------------------------------------------------------------------------


class Definiteness(str, Enum):
    POSITIVE_DEFINITE = "positive definite"
    POSITIVE_SEMIDEFINITE = "positive semidefinite"
    NOT_POSITIVE_SEMIDEFINITE = "not positive semidefinite"


@dataclass(frozen=True)
class HermitianEigen:
    """A = U diag(eigenvalues) U* with U unitary; eigenvalues ascending."""

    eigenvalues: Tuple[DualNumber, ...]
    eigenvectors: Tuple[DCVector, ...]
    definiteness: Definiteness

    @property
    def U(self) -> DCMatrix:
        return from_columns(self.eigenvectors)

    @property
    def is_positive_semidefinite(self) -> bool:
        return self.definiteness is not Definiteness.NOT_POSITIVE_SEMIDEFINITE

    @property
    def is_positive_definite(self) -> bool:
        return self.definiteness is Definiteness.POSITIVE_DEFINITE


def _contiguous_groups(values: np.ndarray, radius: float) -> List[List[int]]:
    groups = [[0]]
    for k in range(1, len(values)):
        if values[k] - values[k - 1] <= radius:
            groups[-1].append(k)
        else:
            groups.append([k])
    return groups


def definiteness_of(eigenvalues: Sequence[DualNumber]) -> Definiteness:
    zero = DualNumber()
    orders = [dn_compare(lam, zero) for lam in eigenvalues]
    if all(o is Ordering.GREATER for o in orders):
        return Definiteness.POSITIVE_DEFINITE
    if all(o is not Ordering.LESS for o in orders):
        return Definiteness.POSITIVE_SEMIDEFINITE
    return Definiteness.NOT_POSITIVE_SEMIDEFINITE


def hermitian_eig(A: DCMatrix) -> HermitianEigen:
    """
    Unitary diagonalization of a Hermitian dual complex matrix.

    A_s is diagonalized first. Standard eigenvalues closer than the residual
    tolerance share one eigenspace U_k; inside it the compressed dual block
    U_k* A_d U_k is diagonalized, giving lambda_d and x_s, and lambda_s is the
    Rayleigh quotient x_s* A_s x_s of that vector. The dual part of each
    eigenvector is the solution of (A_s - lambda_s I) x_d = (lambda_d - A_d) x_s
    orthogonal to U_k.

    Raises:
        NotHermitian: if A != A*.
    """
    if not is_hermitian(A):
        raise NotHermitian("Matrix is not equal to its conjugate transpose")
    tol = get_tolerances()
    A_s = (A.std + A.std.conj().T) / 2
    A_d = (A.dual + A.dual.conj().T) / 2
    w, U = scipy.linalg.eigh(A_s)
    radius = tol.residual * max(1.0, float(np.linalg.norm(A_s)))
    groups = _contiguous_groups(w, radius)
    logger.debug("hermitian_eig: %d distinct standard eigenvalue(s)", len(groups))

    eigenvalues, vectors = [], []
    for group in groups:
        U_k = U[:, group]
        mu, V = scipy.linalg.eigh(U_k.conj().T @ A_d @ U_k)
        others = [k for k in range(len(w)) if k not in group]
        for j in range(len(group)):
            x_s = U_k @ V[:, j]
            lambda_s = float(np.real(np.vdot(x_s, A_s @ x_s)))
            r = mu[j] * x_s - A_d @ x_s
            x_d = np.zeros_like(x_s)
            for k in others:
                x_d += U[:, k] * (np.vdot(U[:, k], r) / (w[k] - lambda_s))
            value = DualNumber(lambda_s, float(mu[j]))
            vector = DCVector(x_s, x_d)
            checked_eigenpair(A, value.as_dual_complex(), vector)
            eigenvalues.append(value)
            vectors.append(vector)

    return HermitianEigen(tuple(eigenvalues), tuple(vectors), definiteness_of(eigenvalues))
