"""
Tests for dual complex matrices and vectors.
"""

import numpy as np
import pytest

from dual_complex_eigen.dcmat import (
    DCMatrix,
    DCVector,
    appreciably_linearly_independent,
    conj_transpose,
    diag,
    from_columns,
    identity,
    inner,
    is_hermitian,
    is_orthogonal,
    is_orthonormal,
    is_unitary,
    mat_add,
    mat_inverse,
    mat_mul,
    mat_sub,
    mat_vec,
    similar_transform,
    similarity_residual,
    unit_vector,
    vec_norm2,
    verify_eigenpair,
    verify_eigenpair_detail,
)
from dual_complex_eigen.dcnum import DualComplex, DualNumber
from dual_complex_eigen.errors import NonFiniteValue, ParseError, ShapeMismatch, SingularStandardPart


@pytest.mark.unit
def test_product_rule():
    A = DCMatrix.from_parts([[1, 2], [3, 4]], [[0, 1], [1, 0]])
    B = DCMatrix.from_parts([[2, 0], [0, 2]], [[1, 1], [1, 1]])
    product = mat_mul(A, B)
    np.testing.assert_allclose(product.std, A.std @ B.std)
    np.testing.assert_allclose(product.dual, A.std @ B.dual + A.dual @ B.std)
    assert (A @ B).is_close(product)


@pytest.mark.unit
def test_shape_errors():
    A = DCMatrix.from_parts(np.ones((2, 3)))
    with pytest.raises(ShapeMismatch):
        mat_mul(A, A)
    with pytest.raises(ShapeMismatch):
        mat_add(A, identity(2))
    with pytest.raises(ShapeMismatch):
        mat_vec(A, unit_vector(2, 0))
    with pytest.raises(ShapeMismatch):
        DCMatrix(np.eye(2), np.eye(3))
    with pytest.raises(ShapeMismatch):
        mat_inverse(A)


@pytest.mark.unit
def test_matrices_are_immutable():
    A = identity(2)
    with pytest.raises(ValueError):
        A.std[0, 0] = 5
    assert A.std[0, 0] == 1


@pytest.mark.unit
def test_nonfinite_entries_rejected():
    with pytest.raises(NonFiniteValue):
        DCMatrix.from_parts([[np.nan]])


@pytest.mark.unit
def test_inverse_of_example(example3):
    """(I + A_d eps)^-1 = I - A_d eps."""
    inv = mat_inverse(example3)
    np.testing.assert_allclose(inv.std, np.eye(2), atol=1e-14)
    np.testing.assert_allclose(inv.dual, -example3.dual, atol=1e-14)
    assert mat_mul(example3, inv).is_close(identity(2), 1e-12)


@pytest.mark.unit
def test_inverse_requires_invertible_standard_part():
    singular = DCMatrix.from_parts(np.zeros((2, 2)), np.eye(2))
    with pytest.raises(SingularStandardPart):
        mat_inverse(singular)


@pytest.mark.unit
def test_unit_vector_and_identity():
    e = unit_vector(3, 1)
    np.testing.assert_array_equal(e.std, [0, 1, 0])
    assert not np.any(e.dual)
    assert mat_vec(identity(3), e).std[1] == 1


@pytest.mark.unit
def test_diag_and_columns():
    D = diag([DualComplex(1, 2), 3])
    np.testing.assert_array_equal(D.std, np.diag([1, 3]))
    np.testing.assert_array_equal(D.dual, np.diag([2, 0]))
    P = from_columns([unit_vector(2, 1), unit_vector(2, 0)])
    np.testing.assert_array_equal(P.std, [[0, 1], [1, 0]])
    with pytest.raises(ShapeMismatch):
        from_columns([unit_vector(2, 0), unit_vector(3, 0)])


@pytest.mark.unit
def test_unitary_with_skew_hermitian_dual_part():
    """I + H eps is unitary exactly when H is skew-Hermitian."""
    rotation = DCMatrix.from_parts(np.eye(2), [[0, 1], [-1, 0]])
    phase = DCMatrix.from_parts(np.eye(2), [[1j, 0], [0, 0]])
    shear = DCMatrix.from_parts(np.eye(2), [[0, 1], [0, 0]])
    assert is_unitary(rotation) and is_orthogonal(rotation)
    assert is_unitary(phase) and not is_orthogonal(phase)
    assert not is_unitary(shear)


@pytest.mark.unit
def test_hermitian_check():
    A = DCMatrix.from_parts([[1, 2j], [-2j, 3]], [[0, 1 + 1j], [1 - 1j, 5]])
    assert is_hermitian(A)
    assert conj_transpose(A).is_close(A)
    assert not is_hermitian(DCMatrix.from_parts([[1, 1], [0, 1]]))
    assert not is_hermitian(DCMatrix.from_parts(np.ones((2, 3))))


@pytest.mark.unit
def test_inner_product_and_orthonormality():
    x = DCVector.from_parts([1, 0], [0, 1])
    y = DCVector.from_parts([0, 1], [-1, 0])
    assert inner(x, x).is_close(1)
    assert inner(x, y).is_close(0)
    assert is_orthonormal([x, y])
    assert not is_orthonormal([x, DCVector.from_parts([1, 1])])


@pytest.mark.unit
def test_vec_norm2_appreciable():
    x = DCVector.from_parts([3, 4], [1, 0])
    norm = vec_norm2(x)
    assert norm.std == pytest.approx(5.0)
    assert norm.dual == pytest.approx(0.6)


@pytest.mark.unit
def test_vec_norm2_infinitesimal():
    x = DCVector.from_parts([0, 0], [3, 4])
    assert vec_norm2(x) == DualNumber(0.0, 5.0)


@pytest.mark.unit
def test_vec_norm2_small_appreciable_vector():
    """Standard parts far below 1 but above abs_tol still give ||x_s|| + ... eps."""
    norm = vec_norm2(DCVector.from_parts([1e-7, 0], [1, 0]))
    assert norm.std == pytest.approx(1e-7)
    assert norm.dual == pytest.approx(1.0)
    norm = vec_norm2(DCVector.from_parts([0, 3e-9j], [0, -4]))
    assert norm.std == pytest.approx(3e-9)
    assert norm.dual == pytest.approx(4.0)


@pytest.mark.unit
def test_vec_norm2_dual_part_uses_magnitudes():
    """(1, eps) has norm 1 + 0 eps; the dual part pairs |x_is| with |x_id|."""
    assert vec_norm2(DCVector.from_parts([1, 0], [0, 1])) == DualNumber(1.0, 0.0)
    norm = vec_norm2(DCVector.from_parts([3, 4j], [-1, 1j]))
    assert norm.std == pytest.approx(5.0)
    assert norm.dual == pytest.approx((3 + 4) / 5)


@pytest.mark.unit
def test_appreciable_independence_looks_at_standard_parts():
    e1, e2 = unit_vector(2, 0), unit_vector(2, 1)
    tilted = DCVector.from_parts([1, 0], [0, 1])
    assert appreciably_linearly_independent([e1, e2])
    assert not appreciably_linearly_independent([e1, tilted])
    assert not appreciably_linearly_independent([e1, e2, e1])


@pytest.mark.unit
def test_verify_eigenpair_example3(example3):
    x = unit_vector(2, 0)
    assert verify_eigenpair(example3, DualComplex(1, 1), x)
    check = verify_eigenpair_detail(example3, DualComplex(1, 0), x)
    assert not check.ok
    assert check.standard_ok and not check.dual_ok
    assert "residual" in check.describe()


@pytest.mark.unit
def test_verify_threshold_is_relative(example3, default_tolerances):
    x = DCVector.from_parts([2, 0], [0, 1])
    check = verify_eigenpair_detail(example3, DualComplex(1, 1), x, tol=1e-6)
    scale = (1 + example3.norm() + 1 + 1) * (2 + 1)
    assert check.threshold == pytest.approx(1e-6 * scale)
    default = verify_eigenpair_detail(example3, DualComplex(1, 1), x)
    assert default.threshold == pytest.approx(1e-9 * scale)


@pytest.mark.unit
def test_verify_rejects_infinitesimal_vector(example3):
    x = DCVector.from_parts([0, 0], [1, 0])
    check = verify_eigenpair_detail(example3, DualComplex(1, 1), x)
    assert not check.ok
    assert check.describe() == "eigenvector is not appreciable"


@pytest.mark.unit
def test_similarity_helpers(example4):
    P = DCMatrix.from_parts(np.eye(3), [[0, 0, 1], [0, 0, 0], [-1, 0, 0]])
    J = similar_transform(P, example4)
    np.testing.assert_allclose(J.dual, [[1, 1, 0], [0, 1, 0], [0, 0, 1]], atol=1e-12)
    assert similarity_residual(example4, P, J) <= 1e-12
    assert mat_sub(J, J).norm() == 0.0


@pytest.mark.unit
def test_matrix_json_roundtrip_and_errors(example2):
    payload = example2.to_json()
    assert payload["rows"] == 2 and payload["cols"] == 2
    assert payload["dual"][0][0] == [1.0, 0.0]
    assert DCMatrix.from_json(payload).is_close(example2, 0.0)
    with pytest.raises(ParseError):
        DCMatrix.from_json({"rows": 2, "cols": 2, "standard": []})
    with pytest.raises(ParseError):
        DCMatrix.from_json({"rows": 1, "cols": 1, "standard": [[[1, 0]]], "dual": [[[1]]]})
    with pytest.raises(ParseError):
        DCMatrix.from_json({"rows": 0, "cols": 1, "standard": [], "dual": []})
    with pytest.raises(ParseError):
        DCMatrix.from_json([[1, 2]])


@pytest.mark.unit
def test_vector_json():
    x = DCVector.from_parts([1j, 2], [0, -1])
    payload = x.to_json()
    assert payload == {"dim": 2, "standard": [[0.0, 1.0], [2.0, 0.0]], "dual": [[0.0, 0.0], [-1.0, 0.0]]}
    back = DCVector.from_json(payload)
    np.testing.assert_array_equal(back.std, x.std)
    with pytest.raises(ParseError):
        DCVector.from_json({"dim": 3, "standard": payload["standard"], "dual": payload["dual"]})
