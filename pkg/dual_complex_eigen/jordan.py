"""
Jordan forms of dual complex matrices in the two cases where one is known:

- the standard part is diagonalizable: P^{-1} A P is block diagonal with
  blocks lambda_is I + (lambda_ijd I + N) eps;
- the standard part is a single Jordan block J_n(lambda_s): P^{-1} A P keeps
  J_s = A_s and a dual part that is zero except for its last row.

A Jordan form of a general dual complex matrix is not attempted.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from dual_complex_eigen.config import get_tolerances
from dual_complex_eigen.cxkernel import cx_jordan, jordan_block, lexicographic_key
from dual_complex_eigen.dcmat import DCMatrix, similarity_residual, unit_vector
from dual_complex_eigen.dcnum import DualComplex
from dual_complex_eigen.eigsolve import (
    Eigenpair,
    InfiniteSolution,
    Regime,
    checked_eigenpair,
    eig_at,
    normalize_eigenvector,
)
from dual_complex_eigen.errors import (
    EigenvaluesNotDistinct,
    IllConditionedStructure,
    NoJordanForm,
    ShapeMismatch,
    StandardPartDefective,
    StandardPartNotBlockScalar,
    StandardPartNotJordanBlock,
)

logger = logging.getLogger(__name__)


class FormKind(str, Enum):
    DIAGONALIZABLE_STANDARD = "diagonalizable-standard"
    JORDAN_BLOCK_STANDARD = "jordan-block-standard"


@dataclass(frozen=True)
class DualJordanBlock:
    """lambda_s I + (lambda_d I + N) eps of the given size, N the nilpotent shift."""

    lambda_s: complex
    lambda_d: complex
    size: int

    def to_json(self) -> Dict[str, Any]:
        return {
            "lambda": DualComplex(self.lambda_s, self.lambda_d).to_json(),
            "size": self.size,
        }


@dataclass(frozen=True)
class CompanionRow:
    """J_n(lambda_s) + eps e_n f^T: the last dual row f is all that remains."""

    lambda_s: complex
    last_row: Tuple[complex, ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "lambda_s": [self.lambda_s.real, self.lambda_s.imag],
            "last_row": [[z.real, z.imag] for z in self.last_row],
        }


BlockDescriptor = Union[DualJordanBlock, CompanionRow]


@dataclass(frozen=True)
class DualJordanForm:
    """J = P^{-1} A P with its block description and any eigenpairs read off P."""

    J: DCMatrix
    P: DCMatrix
    blocks: Tuple[BlockDescriptor, ...]
    kind: FormKind
    residual: float
    eigenpairs: Tuple[Eigenpair, ...] = ()

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "J": self.J.to_json(),
            "P": self.P.to_json(),
            "blocks": [b.to_json() for b in self.blocks],
            "residual": self.residual,
            "eigenpairs": [p.to_json() for p in self.eigenpairs],
        }


def _similarity_check(A: DCMatrix, P: DCMatrix, J: DCMatrix) -> float:
    residual = similarity_residual(A, P, J)
    cond = float(np.linalg.cond(P.std))
    threshold = get_tolerances().residual * (1.0 + A.norm()) * max(1.0, cond)
    if residual > threshold:
        raise IllConditionedStructure(f"Jordan form residual {residual:.3e} exceeds {threshold:.3e}")
    return residual


def _infer_block_scalar(std: np.ndarray) -> List[Tuple[complex, int]]:
    tol = get_tolerances().abs
    if np.any(np.abs(std - np.diag(np.diag(std))) > tol):
        raise StandardPartNotBlockScalar("Standard part is not diagonal")
    runs: List[Tuple[complex, int]] = []
    for value in np.diag(std):
        if runs and abs(value - runs[-1][0]) <= tol:
            runs[-1] = (runs[-1][0], runs[-1][1] + 1)
        else:
            runs.append((complex(value), 1))
    return runs


def _check_structure(std: np.ndarray, structure: Sequence[Tuple[complex, int]]) -> List[Tuple[complex, int]]:
    tol = get_tolerances().abs
    structure = [(complex(lam), int(size)) for lam, size in structure]
    if any(size < 1 for _, size in structure) or sum(size for _, size in structure) != std.shape[0]:
        sizes = [s for _, s in structure]
        raise StandardPartNotBlockScalar(f"Multiplicities {sizes} do not add up to {std.shape[0]}")
    for i, (a, _) in enumerate(structure):
        for b, _ in structure[i + 1 :]:
            if abs(a - b) <= tol:
                raise EigenvaluesNotDistinct(f"Eigenvalue {a} appears in more than one block")
    expected = np.diag(np.concatenate([np.full(size, lam) for lam, size in structure]))
    if np.any(np.abs(std - expected) > tol):
        raise StandardPartNotBlockScalar("Standard part does not match diag(l_1 I, ..., l_t I)")
    return structure


def jordan_diag_standard(
    A: DCMatrix, structure: Optional[Sequence[Tuple[complex, int]]] = None
) -> DualJordanForm:
    """
    Jordan form when A_s = diag(l_1 I_n1, ..., l_t I_nt) with distinct l_i.

    P_s = diag(P_1s, ..., P_ts) Jordanizes each diagonal dual block A_iid and the
    off-diagonal dual blocks of P are P_ijd = (l_j - l_i)^{-1} A_ijd P_js, which
    clears every off-diagonal block of J_d.

    Args:
        A: the matrix
        structure: (l_i, n_i) pairs; inferred from the diagonal of A_s when omitted

    Raises:
        StandardPartNotBlockScalar: if A_s is not of the required form.
        EigenvaluesNotDistinct: if an eigenvalue is repeated across blocks.
    """
    if not A.is_square:
        raise ShapeMismatch(f"Jordan form needs a square matrix, got {A.shape}")
    if structure is None:
        structure = _infer_block_scalar(A.std)
        distinct = {lexicographic_key(lam) for lam, _ in structure}
        if len(distinct) != len(structure):
            raise EigenvaluesNotDistinct("Standard part repeats an eigenvalue in non-adjacent positions")
    structure = _check_structure(A.std, structure)

    n = A.rows
    starts = np.cumsum([0] + [size for _, size in structure])
    spans = [slice(int(starts[i]), int(starts[i + 1])) for i in range(len(structure))]

    P_blocks, J_blocks, descriptors, heads = [], [], [], []
    for (lam, size), own in zip(structure, spans):
        sub = cx_jordan(A.dual[own, own])
        P_blocks.append(sub.transform)
        J_blocks.append(sub.canonical_matrix())
        column = own.start
        for mu, blocks in zip(sub.eigenvalues, sub.blocks):
            for block_size in blocks.block_sizes():
                descriptors.append(DualJordanBlock(lam, mu, block_size))
                heads.append((column, DualComplex(lam, mu)))
                column += block_size

    P_s = scipy.linalg.block_diag(*P_blocks).astype(np.complex128)
    P_d = np.zeros((n, n), dtype=np.complex128)
    for i, (lam_i, _) in enumerate(structure):
        for j, (lam_j, _) in enumerate(structure):
            if i != j:
                P_d[spans[i], spans[j]] = A.dual[spans[i], spans[j]] @ P_blocks[j] / (lam_j - lam_i)

    J_s = np.diag(np.concatenate([np.full(size, lam) for lam, size in structure])).astype(np.complex128)
    J = DCMatrix(J_s, scipy.linalg.block_diag(*J_blocks))
    P = DCMatrix(P_s, P_d)
    residual = _similarity_check(A, P, J)
    eigenpairs = tuple(checked_eigenpair(A, value, normalize_eigenvector(P.column(c))) for c, value in heads)
    logger.debug("jordan_diag_standard: %d block(s), %d eigenvalue(s)", len(descriptors), len(structure))
    return DualJordanForm(J, P, tuple(descriptors), FormKind.DIAGONALIZABLE_STANDARD, residual, eigenpairs)


def _standard_jordan_basis(B: DCMatrix):
    structure = cx_jordan(B.std)
    Q = structure.transform
    A = DCMatrix(structure.canonical_matrix(), scipy.linalg.solve(Q, B.dual @ Q))
    return structure, Q, A


def _compose(Q: np.ndarray, P: DCMatrix) -> DCMatrix:
    return DCMatrix(Q @ P.std, Q @ P.dual)


def jordan_form_full(B: DCMatrix) -> DualJordanForm:
    """
    Jordan form of B when B_s is diagonalizable.

    With Q_s^{-1} B_s Q_s diagonal and A = Q_s^{-1} B Q_s, the form of A from
    jordan_diag_standard is also the form of B under Q_s P. B has one eigenvalue
    l_is + l_ijd eps per Jordan block of the dual diagonal blocks; its eigenvector
    is the column of Q_s P at the first column of that block.

    Raises:
        StandardPartDefective: if B_s is not diagonalizable.
    """
    if not B.is_square:
        raise ShapeMismatch(f"Jordan form needs a square matrix, got {B.shape}")
    structure, Q, A = _standard_jordan_basis(B)
    if not structure.is_diagonalizable():
        raise StandardPartDefective(
            "Standard part has Jordan blocks of sizes "
            + ", ".join(str(s) for b in structure.blocks for s in b.sizes)
        )
    inner = jordan_diag_standard(A, [(lam, b.n0) for lam, b in zip(structure.eigenvalues, structure.blocks)])
    P = _compose(Q, inner.P)
    residual = _similarity_check(B, P, inner.J)

    heads, column = [], 0
    for block in inner.blocks:
        heads.append((column, DualComplex(block.lambda_s, block.lambda_d)))
        column += block.size
    eigenpairs = tuple(checked_eigenpair(B, value, normalize_eigenvector(P.column(c))) for c, value in heads)
    return DualJordanForm(inner.J, P, inner.blocks, FormKind.DIAGONALIZABLE_STANDARD, residual, eigenpairs)


def _require_jordan_block(A: DCMatrix) -> complex:
    if not A.is_square:
        raise ShapeMismatch(f"Jordan form needs a square matrix, got {A.shape}")
    n = A.rows
    if n < 2:
        raise StandardPartNotJordanBlock("A single Jordan block standard part needs n >= 2")
    lambda_s = complex(A.std[0, 0])
    if np.any(np.abs(A.std - jordan_block(n, lambda_s)) > get_tolerances().abs):
        raise StandardPartNotJordanBlock(f"Standard part is not J_{n}({lambda_s:.6g})")
    return lambda_s


def jordan_block_standard(A: DCMatrix) -> DualJordanForm:
    """
    Jordan form when A_s = J_n(l_s), n >= 2.

    P = I + P_d eps gives J_d = A_d + N P_d - P_d N, which is solved one
    (sub)diagonal at a time: on and below the diagonal every entry but the
    one in the last row is cleared; above it everything is cleared, anchoring
    each superdiagonal chain at its first entry. The corner entry a_n1 cannot
    be changed by any P_d.

    Raises:
        StandardPartNotJordanBlock: if A_s is not J_n(l_s).
    """
    lambda_s = _require_jordan_block(A)
    n = A.rows
    a = A.dual
    P_d = np.zeros((n, n), dtype=np.complex128)

    # on and below the diagonal: entries of diagonal l + 1 of P_d, walking down diagonal l of A_d
    for l in range(n - 2, -1, -1):
        q = 0j
        for j in range(n - l - 1):
            q = q - a[l + j, j]
            P_d[l + 1 + j, j] = q

    # above the diagonal, anchored at p[0, -l-1] = 0
    for l in range(-1, -n, -1):
        r = 0j
        for i in range(n + l):
            r = r - a[i, i - l]
            P_d[i + 1, i - l] = r

    last_row = np.empty(n, dtype=np.complex128)
    last_row[0] = a[n - 1, 0]
    last_row[1:] = a[n - 1, 1:] - P_d[n - 1, :-1]
    J_d = np.zeros((n, n), dtype=np.complex128)
    J_d[n - 1] = last_row

    J = DCMatrix(A.std, J_d)
    P = DCMatrix(np.eye(n), P_d)
    residual = _similarity_check(A, P, J)
    descriptor = CompanionRow(lambda_s, tuple(complex(z) for z in last_row))
    return DualJordanForm(J, P, (descriptor,), FormKind.JORDAN_BLOCK_STANDARD, residual)


@dataclass(frozen=True)
class JordanBlockEigen:
    """No eigenvalue when the corner entry a_n1d is nonzero, otherwise l_s + l_d eps for all l_d."""

    regime: Regime
    lambda_s: complex
    corner: complex
    family: Optional[InfiniteSolution] = field(default=None, repr=False)


def eig_jordan_block(A: DCMatrix) -> JordanBlockEigen:
    """
    Raises:
        StandardPartNotJordanBlock: if A_s is not J_n(l_s) with n >= 2.
    """
    lambda_s = _require_jordan_block(A)
    corner = complex(A.dual[A.rows - 1, 0])
    if abs(corner) > get_tolerances().abs:
        return JordanBlockEigen(Regime.NONE, lambda_s, corner)
    family = eig_at(A, lambda_s, unit_vector(A.rows, 0).std)
    return JordanBlockEigen(Regime.INFINITE, lambda_s, corner, family)


def jordan_form(B: DCMatrix) -> DualJordanForm:
    """
    Pick the applicable construction from the Jordan structure of B_s.

    Raises:
        NoJordanForm: if B_s is neither diagonalizable nor a single Jordan block.
    """
    structure, Q, A = _standard_jordan_basis(B)
    if structure.is_diagonalizable():
        return jordan_form_full(B)
    if structure.is_single_jordan_block():
        inner = jordan_block_standard(A)
        P = _compose(Q, inner.P)
        residual = _similarity_check(B, P, inner.J)
        return DualJordanForm(inner.J, P, inner.blocks, inner.kind, residual)
    raise NoJordanForm(
        "Standard part is neither diagonalizable nor a single Jordan block; "
        "only the eigenvalue classification applies"
    )
