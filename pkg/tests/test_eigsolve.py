"""
Tests for eigenvalue classification, diagonalizability and Hermitian matrices.
"""

import numpy as np
import pytest

from dual_complex_eigen.cxkernel import BlockStructure, jordan_block
from dual_complex_eigen.dcmat import DCMatrix, DCVector, verify_eigenpair
from dual_complex_eigen.dcnum import DualComplex, DualNumber
from dual_complex_eigen.eigsolve import (
    FAMILY_SAMPLES,
    Definiteness,
    FiniteEigenvalues,
    InfiniteFamily,
    InfiniteSolution,
    NoEigenvalue,
    NoSolution,
    Regime,
    StructuredPencil,
    UniqueSolution,
    _blockwise_verdict,
    build_structured_pencil,
    definiteness_of,
    eig_all,
    eig_at,
    hermitian_eig,
    is_diagonalizable,
    normalize_eigenvector,
    structured_eigen_system,
)
from dual_complex_eigen.errors import (
    BadBlockStructure,
    ConvergenceFailure,
    IllConditionedStructure,
    NotAnEigenpair,
    NotHermitian,
)


@pytest.mark.unit
def test_eig_at_no_solution(example1):
    result = eig_at(example1, 1, [1, 0])
    assert isinstance(result, NoSolution)
    assert result.regime is Regime.NONE
    assert result.residual > result.threshold


@pytest.mark.unit
def test_eig_at_infinite_family(example2):
    """The dual part of the eigenvector satisfies x_d2 = l_d - 1."""
    result = eig_at(example2, 1, [1, 0])
    assert isinstance(result, InfiniteSolution)
    for lambda_d in FAMILY_SAMPLES:
        value, x = result.eigenpair(lambda_d)
        assert x.dual[1] == pytest.approx(lambda_d - 1)
        assert verify_eigenpair(example2, value, x, tol=1e-10)


@pytest.mark.unit
def test_eig_at_unique_for_zero_matrix():
    zero = DCMatrix.from_parts(np.zeros((2, 2)))
    result = eig_at(zero, 0, [1, 0])
    assert isinstance(result, UniqueSolution)
    assert result.lambda_d == pytest.approx(0)
    value, x = result.eigenpair()
    assert verify_eigenpair(zero, value, x)


@pytest.mark.unit
def test_eig_at_unique_reads_off_dual_eigenvalue(example3):
    result = eig_at(example3, 1, [1, 0])
    assert isinstance(result, UniqueSolution)
    assert result.lambda_d == pytest.approx(1)


@pytest.mark.unit
def test_eig_at_rejects_non_eigenpair(example1):
    with pytest.raises(NotAnEigenpair):
        eig_at(example1, 1, [0, 1])
    with pytest.raises(NotAnEigenpair):
        eig_at(example1, 1, [0, 0])


@pytest.mark.unit
def test_build_structured_pencil_selectors():
    """Blocks (n0=1; 3, 2): first columns 0, 1, 4 and last rows 0, 3, 5."""
    A_d = np.arange(36, dtype=complex).reshape(6, 6)
    pencil = build_structured_pencil(A_d, BlockStructure(1, (3, 2)))
    assert (pencil.n0, pencil.t, pencil.size) == (1, 2, 3)
    np.testing.assert_array_equal(pencil.C, A_d[np.ix_([0, 3, 5], [0, 1, 4])])
    np.testing.assert_array_equal(pencil.W.T @ A_d @ pencil.Z, pencil.C)
    np.testing.assert_array_equal(pencil.C00, [[0]])
    np.testing.assert_array_equal(pencil.C11, [[19, 22], [31, 34]])
    np.testing.assert_array_equal(pencil.matrix(2.0), np.diag([2, 0, 0]) - pencil.C)


@pytest.mark.unit
def test_build_structured_pencil_rejects_bad_blocks():
    with pytest.raises(BadBlockStructure):
        build_structured_pencil(np.eye(3), BlockStructure(1, (1, 1)))
    with pytest.raises(BadBlockStructure):
        build_structured_pencil(np.eye(3), BlockStructure(0, (2,)))
    with pytest.raises(BadBlockStructure):
        StructuredPencil.from_matrix(np.eye(2), 3)


@pytest.mark.unit
@pytest.mark.parametrize(
    "C, n0, regime",
    [
        ([[2.0]], 1, Regime.FINITE),
        ([[1.0]], 0, Regime.NONE),
        ([[0.0]], 0, Regime.INFINITE),
        ([[0.0, 0.0], [1.0, 0.0]], 1, Regime.INFINITE),
        ([[5.0, 1.0], [1.0, 0.0]], 1, Regime.NONE),
    ],
)
def test_structured_eigen_system_regimes(C, n0, regime):
    solution = structured_eigen_system(StructuredPencil.from_matrix(C, n0))
    assert solution.regime is regime


@pytest.mark.unit
def test_structured_eigen_system_schur_complement():
    """C00 - C01 C11^-1 C10 = [[1, 0], [0, 2]] - [[1], [1]] [[1, 1]] / 2."""
    C = np.array([[1, 0, 1], [0, 2, 1], [1, 1, 2]], dtype=complex)
    solution = structured_eigen_system(StructuredPencil.from_matrix(C, 2))
    expected = np.linalg.eigvals(np.array([[0.5, -0.5], [-0.5, 1.5]]))
    found = sorted(r.lambda_d.real for r in solution.roots)
    np.testing.assert_allclose(found, sorted(expected.real), atol=1e-10)
    for root in solution.roots:
        M = StructuredPencil.from_matrix(C, 2).matrix(root.lambda_d)
        np.testing.assert_allclose(M @ root.kernel, 0, atol=1e-9)


@pytest.mark.unit
def test_eig_all_example1_has_no_eigenvalue(example1):
    report = eig_all(example1)
    assert report.regime is Regime.NONE
    assert report.any_none and not report.any_infinite
    assert report.finite_count == 0
    (cls,) = report.classes
    assert isinstance(cls, NoEigenvalue)
    assert cls.structure == BlockStructure(0, (2,))
    assert abs(cls.determinant) == pytest.approx(1.0)
    assert cls.sigma_min == pytest.approx(1.0)


@pytest.mark.unit
def test_eig_all_example2_is_infinite(example2):
    report = eig_all(example2)
    assert report.regime is Regime.INFINITE
    (cls,) = report.classes
    assert isinstance(cls, InfiniteFamily)
    assert cls.lambda_s == pytest.approx(1)
    rep = cls.representative
    assert verify_eigenpair(example2, rep.value, rep.vector, tol=1e-10)
    for lambda_d in FAMILY_SAMPLES:
        pair = cls.eigenpair(lambda_d)
        assert pair.value.dual == lambda_d
        assert verify_eigenpair(example2, pair.value, pair.vector, tol=1e-10)


@pytest.mark.unit
def test_eig_all_example3_single_eigenvalue(example3):
    report = eig_all(example3)
    assert report.regime is Regime.FINITE
    (pair,) = report.eigenpairs()
    assert pair.value.is_close(DualComplex(1, 1), 1e-8)
    assert pair.multiplicity == 2
    assert verify_eigenpair(example3, pair.value, pair.vector)


@pytest.mark.unit
def test_eig_all_example4(example4):
    report = eig_all(example4)
    values = report.finite_eigenvalues()
    assert len(values) == 2
    assert values[0].is_close(DualComplex(1, 1), 1e-8)
    assert values[1].is_close(DualComplex(2, 1), 1e-8)
    assert [c.structure for c in report.classes] == [BlockStructure(2), BlockStructure(1)]
    for pair in report.eigenpairs():
        assert verify_eigenpair(example4, pair.value, pair.vector)
        assert np.linalg.norm(pair.vector.std) == pytest.approx(1.0)


@pytest.mark.unit
def test_eig_all_cross_block_dual_parts(example5):
    report = eig_all(example5)
    assert all(isinstance(c, FiniteEigenvalues) for c in report.classes)
    assert report.finite_count == 3
    for pair in report.eigenpairs():
        assert verify_eigenpair(example5, pair.value, pair.vector)


@pytest.mark.unit
def test_eig_all_mixed_regimes():
    """J_2(1) with a nonzero corner next to a simple eigenvalue 3."""
    A_s = np.zeros((3, 3), dtype=complex)
    A_s[:2, :2] = jordan_block(2, 1)
    A_s[2, 2] = 3
    A_d = np.array([[0, 0, 1], [2, 0, 0], [1, 1, 4]], dtype=complex)
    report = eig_all(DCMatrix.from_parts(A_s, A_d))
    assert [c.regime for c in report.classes] == [Regime.NONE, Regime.FINITE]
    assert report.regime is Regime.FINITE and report.any_none
    (pair,) = report.eigenpairs()
    assert pair.value.is_close(DualComplex(3, 4), 1e-8)


@pytest.mark.unit
def test_normalize_eigenvector():
    x = normalize_eigenvector(DCVector.from_parts([0, -2j], [1, 1]))
    np.testing.assert_allclose(x.std, [0, 1], atol=1e-15)
    np.testing.assert_allclose(x.dual, [0.5j, 0.5j])


@pytest.mark.unit
@pytest.mark.parametrize("number, expected", [(1, False), (2, False), (3, False), (4, False), (5, True)])
def test_is_diagonalizable_examples(request, number, expected):
    A = request.getfixturevalue(f"example{number}")
    result = is_diagonalizable(A)
    assert bool(result) is expected


@pytest.mark.unit
def test_diagonalization_certificate(example5):
    result = is_diagonalizable(example5)
    assert result.residual <= 1e-10
    np.testing.assert_allclose(np.diag(result.D.std), [1, 1, 2], atol=1e-10)
    np.testing.assert_allclose(np.diag(result.D.dual), [1, 1, 1], atol=1e-10)
    assert result.report.finite_count == 3


@pytest.mark.unit
def test_not_diagonalizable_reasons(example2, example4):
    assert is_diagonalizable(example2).reason == "infinitely many eigenvalues"
    assert is_diagonalizable(example4).reason == "2 eigenvalue(s) for order 3"


@pytest.mark.unit
def test_hermitian_eig_distinct():
    A = DCMatrix.from_parts(np.diag([1.0, 2.0]), [[1, 1j], [-1j, 0]])
    result = hermitian_eig(A)
    assert result.eigenvalues[0].std == pytest.approx(1.0)
    assert result.eigenvalues[0].dual == pytest.approx(1.0)
    assert result.eigenvalues[1].std == pytest.approx(2.0)
    assert result.eigenvalues[1].dual == pytest.approx(0.0, abs=1e-12)
    assert result.is_positive_definite
    for lam, x in zip(result.eigenvalues, result.eigenvectors):
        assert verify_eigenpair(A, lam.as_dual_complex(), x)


@pytest.mark.unit
def test_hermitian_eig_repeated_standard_eigenvalue():
    """I + [[0, 1], [1, 0]] eps splits into 1 - eps and 1 + eps."""
    A = DCMatrix.from_parts(np.eye(2), [[0, 1], [1, 0]])
    result = hermitian_eig(A)
    duals = [lam.dual for lam in result.eigenvalues]
    np.testing.assert_allclose(duals, [-1, 1], atol=1e-12)
    U = result.U
    gram = U.std.conj().T @ U.std
    np.testing.assert_allclose(gram, np.eye(2), atol=1e-12)


@pytest.mark.unit
def test_hermitian_eig_rejects_non_hermitian(example3):
    with pytest.raises(NotHermitian):
        hermitian_eig(example3)


@pytest.mark.unit
def test_definiteness_verdicts():
    assert definiteness_of([DualNumber(1, -5), DualNumber(0, 1)]) is Definiteness.POSITIVE_DEFINITE
    assert definiteness_of([DualNumber(1, 0), DualNumber(0, 0)]) is Definiteness.POSITIVE_SEMIDEFINITE
    assert definiteness_of([DualNumber(0, -1)]) is Definiteness.NOT_POSITIVE_SEMIDEFINITE


@pytest.mark.unit
def test_hermitian_eig_close_but_distinct_standard_eigenvalues(default_tolerances):
    """1 and 1 + 1e-7 stay separate eigenvalues; the coupling moves into x_d."""
    A = DCMatrix.from_parts(np.diag([1.0, 1.0 + 1e-7]), [[0, 1], [1, 0]])
    result = hermitian_eig(A)
    stds = [lam.std for lam in result.eigenvalues]
    np.testing.assert_allclose(stds, [1.0, 1.0 + 1e-7], rtol=0, atol=1e-13)
    np.testing.assert_allclose([lam.dual for lam in result.eigenvalues], [0, 0], atol=1e-9)
    for lam, x in zip(result.eigenvalues, result.eigenvectors):
        assert verify_eigenpair(A, lam.as_dual_complex(), x)
        assert np.linalg.norm(x.dual) == pytest.approx(1e7, rel=1e-6)


@pytest.mark.unit
def test_blockwise_verdict_matches_examples(example3, example5):
    assert _blockwise_verdict(example5) is True
    assert _blockwise_verdict(example3) is False


@pytest.mark.unit
def test_is_diagonalizable_raises_when_blockwise_test_disagrees(mocker, example5):
    mocker.patch("dual_complex_eigen.eigsolve._blockwise_verdict", return_value=False)
    with pytest.raises(IllConditionedStructure):
        is_diagonalizable(example5)


@pytest.mark.unit
def test_blockwise_verdict_skips_on_solver_errors(mocker, example5):
    mocker.patch("dual_complex_eigen.eigsolve.cx_jordan", side_effect=ConvergenceFailure("no convergence"))
    assert _blockwise_verdict(example5) is None
