"""
Dual complex matrices and vectors.

A = A_s + A_d eps is stored as a pair of same-shape complex numpy arrays. All
objects are immutable; every operation returns a new value.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from dual_complex_eigen.config import get_tolerances
from dual_complex_eigen.cxkernel import cx_rank
from dual_complex_eigen.dcnum import DualComplex, DualNumber
from dual_complex_eigen.errors import NonFiniteValue, ParseError, ShapeMismatch, SingularStandardPart

logger = logging.getLogger(__name__)


def _frozen(array: Any, ndim: int, name: str) -> np.ndarray:
    out = np.array(array, dtype=np.complex128, copy=True)
    if out.ndim != ndim:
        raise ShapeMismatch(f"{name} must be {ndim}-dimensional, got shape {out.shape}")
    if not np.all(np.isfinite(out)):
        raise NonFiniteValue(f"{name} contains NaN or infinity")
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class DCMatrix:
    """Dual complex matrix A = std + dual*eps."""

    std: np.ndarray
    dual: np.ndarray

    def __post_init__(self):
        std = _frozen(self.std, 2, "standard part")
        dual = _frozen(self.dual, 2, "dual part")
        if std.shape != dual.shape:
            raise ShapeMismatch(f"Standard part {std.shape} and dual part {dual.shape} differ in shape")
        object.__setattr__(self, "std", std)
        object.__setattr__(self, "dual", dual)

    @classmethod
    def from_parts(cls, std: Any, dual: Optional[Any] = None) -> "DCMatrix":
        std = np.asarray(std, dtype=np.complex128)
        return cls(std, np.zeros_like(std) if dual is None else dual)

    @property
    def rows(self) -> int:
        return self.std.shape[0]

    @property
    def cols(self) -> int:
        return self.std.shape[1]

    @property
    def shape(self):
        return self.std.shape

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> DualComplex:
        return DualComplex(self.std[i, j], self.dual[i, j])

    def column(self, j: int) -> "DCVector":
        return DCVector(self.std[:, j], self.dual[:, j])

    def norm(self) -> float:
        """||A_s||_F + ||A_d||_F, used to scale residual tolerances."""
        return float(np.linalg.norm(self.std) + np.linalg.norm(self.dual))

    def is_close(self, other: "DCMatrix", tol: Optional[float] = None) -> bool:
        tol = get_tolerances().abs if tol is None else tol
        if self.shape != other.shape:
            return False
        return bool(
            np.allclose(self.std, other.std, rtol=0.0, atol=tol)
            and np.allclose(self.dual, other.dual, rtol=0.0, atol=tol)
        )

    def __matmul__(self, other):
        if isinstance(other, DCVector):
            return mat_vec(self, other)
        return mat_mul(self, other)

    def __add__(self, other: "DCMatrix") -> "DCMatrix":
        return mat_add(self, other)

    def __sub__(self, other: "DCMatrix") -> "DCMatrix":
        return mat_sub(self, other)

    def to_json(self) -> Dict[str, Any]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "standard": _encode_rows(self.std),
            "dual": _encode_rows(self.dual),
        }

    @classmethod
    def from_json(cls, payload: Dict[str, Any]) -> "DCMatrix":
        """Decode the wire format {"rows", "cols", "standard", "dual"}."""
        if not isinstance(payload, dict):
            raise ParseError("Matrix JSON must be an object")
        missing = {"rows", "cols", "standard", "dual"} - set(payload)
        if missing:
            raise ParseError(f"Matrix JSON is missing keys: {', '.join(sorted(missing))}")
        rows, cols = payload["rows"], payload["cols"]
        if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
            raise ParseError(f"Matrix dimensions must be positive integers, got {rows!r} x {cols!r}")
        std = _decode_rows(payload["standard"], rows, cols, "standard")
        dual = _decode_rows(payload["dual"], rows, cols, "dual")
        return cls(std, dual)

    def __repr__(self) -> str:
        return f"DCMatrix(std={self.std.tolist()!r}, dual={self.dual.tolist()!r})"


@dataclass(frozen=True, eq=False)
class DCVector:
    """Dual complex column vector x = std + dual*eps."""

    std: np.ndarray
    dual: np.ndarray

    def __post_init__(self):
        std = _frozen(self.std, 1, "standard part")
        dual = _frozen(self.dual, 1, "dual part")
        if std.shape != dual.shape:
            raise ShapeMismatch(f"Standard part {std.shape} and dual part {dual.shape} differ in shape")
        object.__setattr__(self, "std", std)
        object.__setattr__(self, "dual", dual)

    @classmethod
    def from_parts(cls, std: Any, dual: Optional[Any] = None) -> "DCVector":
        std = np.asarray(std, dtype=np.complex128)
        return cls(std, np.zeros_like(std) if dual is None else dual)

    @property
    def dim(self) -> int:
        return self.std.shape[0]

    def entry(self, i: int) -> DualComplex:
        return DualComplex(self.std[i], self.dual[i])

    def is_appreciable(self, tol: Optional[float] = None) -> bool:
        tol = get_tolerances().abs if tol is None else tol
        return bool(np.any(np.abs(self.std.real) > tol) or np.any(np.abs(self.std.imag) > tol))

    def scale(self, c: DualComplex) -> "DCVector":
        return DCVector(c.std * self.std, c.std * self.dual + c.dual * self.std)

    def to_json(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "standard": [[float(z.real), float(z.imag)] for z in self.std],
            "dual": [[float(z.real), float(z.imag)] for z in self.dual],
        }

    @classmethod
    def from_json(cls, payload: Dict[str, Any]) -> "DCVector":
        if not isinstance(payload, dict) or not {"dim", "standard", "dual"} <= set(payload):
            raise ParseError("Vector JSON must be an object with 'dim', 'standard' and 'dual'")
        dim = payload["dim"]
        if not isinstance(dim, int) or dim < 1:
            raise ParseError(f"Vector dimension must be a positive integer, got {dim!r}")
        std = _decode_rows([payload["standard"]], 1, dim, "standard")[0]
        dual = _decode_rows([payload["dual"]], 1, dim, "dual")[0]
        return cls(std, dual)

    def __repr__(self) -> str:
        return f"DCVector(std={self.std.tolist()!r}, dual={self.dual.tolist()!r})"


def _encode_rows(array: np.ndarray) -> List[List[List[float]]]:
    return [[[float(z.real), float(z.imag)] for z in row] for row in array]


def _decode_rows(rows_payload: Any, rows: int, cols: int, name: str) -> np.ndarray:
    try:
        array = np.array(rows_payload, dtype=np.float64)
    except (TypeError, ValueError):
        raise ParseError(f"'{name}' must be a row-major array of [re, im] pairs") from None
    if array.shape != (rows, cols, 2):
        raise ParseError(f"'{name}' has shape {array.shape}, expected ({rows}, {cols}, 2)")
    if not np.all(np.isfinite(array)):
        raise ParseError(f"'{name}' contains NaN or infinity")
    return array[..., 0] + 1j * array[..., 1]


def identity(n: int) -> DCMatrix:
    return DCMatrix.from_parts(np.eye(n))


def unit_vector(n: int, i: int) -> DCVector:
    """e_i of length n (0-based index)."""
    std = np.zeros(n, dtype=np.complex128)
    std[i] = 1.0
    return DCVector.from_parts(std)


def diag(values: Sequence[DualComplex]) -> DCMatrix:
    values = [DualComplex.coerce(v) for v in values]
    return DCMatrix(np.diag([v.std for v in values]), np.diag([v.dual for v in values]))


def from_columns(columns: Sequence[DCVector]) -> DCMatrix:
    if not columns:
        raise ShapeMismatch("Cannot build a matrix from zero columns")
    dims = {x.dim for x in columns}
    if len(dims) != 1:
        raise ShapeMismatch(f"Columns have different dimensions: {sorted(dims)}")
    return DCMatrix(np.column_stack([x.std for x in columns]), np.column_stack([x.dual for x in columns]))


def mat_add(A: DCMatrix, B: DCMatrix) -> DCMatrix:
    if A.shape != B.shape:
        raise ShapeMismatch(f"Cannot add {A.shape} and {B.shape}")
    return DCMatrix(A.std + B.std, A.dual + B.dual)


def mat_sub(A: DCMatrix, B: DCMatrix) -> DCMatrix:
    if A.shape != B.shape:
        raise ShapeMismatch(f"Cannot subtract {B.shape} from {A.shape}")
    return DCMatrix(A.std - B.std, A.dual - B.dual)


def mat_mul(A: DCMatrix, B: DCMatrix) -> DCMatrix:
    """(AB)_s = A_s B_s, (AB)_d = A_s B_d + A_d B_s."""
    if A.cols != B.rows:
        raise ShapeMismatch(f"Inner dimensions disagree: {A.shape} @ {B.shape}")
    return DCMatrix(A.std @ B.std, A.std @ B.dual + A.dual @ B.std)


def mat_vec(A: DCMatrix, x: DCVector) -> DCVector:
    if A.cols != x.dim:
        raise ShapeMismatch(f"Cannot apply {A.shape} matrix to vector of length {x.dim}")
    return DCVector(A.std @ x.std, A.std @ x.dual + A.dual @ x.std)


def conj_transpose(A: DCMatrix) -> DCMatrix:
    return DCMatrix(A.std.conj().T, A.dual.conj().T)


def mat_inverse(A: DCMatrix) -> DCMatrix:
    """
    Inverse of a square dual complex matrix.

    B_s = A_s^{-1} and B_d = -A_s^{-1} A_d A_s^{-1}; it exists exactly when A_s is
    invertible.

    Raises:
        ShapeMismatch: if A is not square.
        SingularStandardPart: if rank(A_s) < n at the active rank tolerance.
    """
    if not A.is_square:
        raise ShapeMismatch(f"Only square matrices have inverses, got {A.shape}")
    n = A.rows
    rank = cx_rank(A.std)
    if rank < n:
        raise SingularStandardPart(f"Standard part has rank {rank} < {n}")
    inv_s = np.linalg.solve(A.std, np.eye(n, dtype=np.complex128))
    return DCMatrix(inv_s, -inv_s @ A.dual @ inv_s)


def is_unitary(A: DCMatrix, tol: Optional[float] = None) -> bool:
    """A A* = I within the absolute tolerance."""
    if not A.is_square:
        raise ShapeMismatch(f"Unitarity needs a square matrix, got {A.shape}")
    tol = get_tolerances().abs if tol is None else tol
    product = mat_mul(A, conj_transpose(A))
    scale = 1.0 + A.norm() ** 2
    return product.is_close(identity(A.rows), tol * scale)


def is_orthogonal(A: DCMatrix, tol: Optional[float] = None) -> bool:
    """Unitary dual number (real) matrix."""
    tol = get_tolerances().abs if tol is None else tol
    real = bool(np.all(np.abs(A.std.imag) <= tol) and np.all(np.abs(A.dual.imag) <= tol))
    return real and is_unitary(A, tol)


def is_hermitian(A: DCMatrix, tol: Optional[float] = None) -> bool:
    if not A.is_square:
        return False
    tol = get_tolerances().abs if tol is None else tol
    return A.is_close(conj_transpose(A), tol * (1.0 + A.norm()))


def inner(x: DCVector, y: DCVector) -> DualComplex:
    """x* y = sum_j conj(x_j) y_j."""
    if x.dim != y.dim:
        raise ShapeMismatch(f"Vectors of length {x.dim} and {y.dim}")
    std = np.vdot(x.std, y.std)
    dual = np.vdot(x.std, y.dual) + np.vdot(x.dual, y.std)
    return DualComplex(complex(std), complex(dual))


def vec_norm2(x: DCVector) -> DualNumber:
    """
    2-norm of a dual complex vector.

    For appreciable x this is sqrt(sum |x_i|^2) with the dual magnitude |x_i|,
    i.e. ||x_s|| + (sum |x_is| |x_id| / ||x_s||) eps; otherwise it is ||x_d||_2 eps.
    Appreciability is decided on x_s itself, not on its squared norm.
    """
    if not x.is_appreciable():
        return DualNumber(0.0, float(np.linalg.norm(x.dual)))
    std = float(np.linalg.norm(x.std))
    dual = float(np.sum(np.abs(x.std) * np.abs(x.dual))) / std
    return DualNumber(std, dual)


def is_orthonormal(xs: Sequence[DCVector], tol: Optional[float] = None) -> bool:
    """Pairwise check x_i* x_j = delta_ij."""
    tol = get_tolerances().abs if tol is None else tol
    for i, x in enumerate(xs):
        for j, y in enumerate(xs):
            target = 1.0 if i == j else 0.0
            if not inner(x, y).is_close(target, tol * max(1, x.dim)):
                return False
    return True


def appreciably_linearly_independent(xs: Sequence[DCVector]) -> bool:
    """True iff the standard parts have full column rank."""
    if not xs:
        return True
    dims = {x.dim for x in xs}
    if len(dims) != 1:
        raise ShapeMismatch(f"Vectors have different dimensions: {sorted(dims)}")
    n = dims.pop()
    if len(xs) > n:
        return False
    stacked = np.column_stack([x.std for x in xs])
    return cx_rank(stacked) == len(xs)


@dataclass(frozen=True)
class EigenpairCheck:
    """Outcome of verify_eigenpair_detail, naming which split equation failed."""

    appreciable: bool
    standard_residual: float
    dual_residual: float
    threshold: float

    @property
    def standard_ok(self) -> bool:
        return self.standard_residual <= self.threshold

    @property
    def dual_ok(self) -> bool:
        return self.dual_residual <= self.threshold

    @property
    def ok(self) -> bool:
        return self.appreciable and self.standard_ok and self.dual_ok

    def describe(self) -> str:
        if not self.appreciable:
            return "eigenvector is not appreciable"
        problems = []
        if not self.standard_ok:
            problems.append(f"A_s x_s != l_s x_s (residual {self.standard_residual:.3e})")
        if not self.dual_ok:
            problems.append(f"(A_s - l_s I) x_d - l_d x_s != -A_d x_s (residual {self.dual_residual:.3e})")
        return "; ".join(problems) if problems else "eigenpair verified"


def verify_eigenpair_detail(
    A: DCMatrix, lam: DualComplex, x: DCVector, tol: Optional[float] = None
) -> EigenpairCheck:
    """
    Check A x = l x through its two split equations.

        A_s x_s = l_s x_s
        (A_s - l_s I) x_d - l_d x_s = -A_d x_s

    The test is relative, not absolute. Both residual norms are compared against

        threshold = tol * (1 + ||A_s||_F + ||A_d||_F + |l_s| + |l_d|) * (||x_s|| + ||x_d||)

    where tol defaults to the active residual tolerance (1e-9 unless overridden).
    The threshold is reported on the returned EigenpairCheck.
    """
    if not A.is_square or A.rows != x.dim:
        raise ShapeMismatch(f"Matrix {A.shape} and vector of length {x.dim}")
    tol = get_tolerances().residual if tol is None else tol
    lam = DualComplex.coerce(lam)
    shifted = A.std - lam.std * np.eye(A.rows)
    standard = shifted @ x.std
    dual = shifted @ x.dual - lam.dual * x.std + A.dual @ x.std
    scale = (1.0 + A.norm() + abs(lam.std) + abs(lam.dual)) * (np.linalg.norm(x.std) + np.linalg.norm(x.dual))
    return EigenpairCheck(
        appreciable=x.is_appreciable(),
        standard_residual=float(np.linalg.norm(standard)),
        dual_residual=float(np.linalg.norm(dual)),
        threshold=float(tol * scale),
    )


def verify_eigenpair(A: DCMatrix, lam: DualComplex, x: DCVector, tol: Optional[float] = None) -> bool:
    """True iff x is appreciable and A x = l x holds within tolerance."""
    return verify_eigenpair_detail(A, lam, x, tol).ok


def similar_transform(P: DCMatrix, B: DCMatrix) -> DCMatrix:
    """
    Return P^{-1} B P.

    Raises:
        SingularStandardPart: if P is not invertible.
    """
    if not (P.is_square and B.is_square) or P.rows != B.rows:
        raise ShapeMismatch(f"Cannot conjugate {B.shape} by {P.shape}")
    return mat_mul(mat_mul(mat_inverse(P), B), P)


def similarity_residual(A: DCMatrix, P: DCMatrix, J: DCMatrix) -> float:
    """||P^{-1} A P - J|| as std + dual Frobenius norms."""
    diff = mat_sub(similar_transform(P, A), J)
    return diff.norm()


__all__ = [
    "DCMatrix",
    "DCVector",
    "EigenpairCheck",
    "SingularStandardPart",
    "appreciably_linearly_independent",
    "conj_transpose",
    "diag",
    "from_columns",
    "identity",
    "inner",
    "is_hermitian",
    "is_orthogonal",
    "is_orthonormal",
    "is_unitary",
    "mat_add",
    "mat_inverse",
    "mat_mul",
    "mat_sub",
    "mat_vec",
    "similar_transform",
    "similarity_residual",
    "unit_vector",
    "vec_norm2",
    "verify_eigenpair",
    "verify_eigenpair_detail",
]
