import numpy as np
import pytest

from anisotropic_waves import (
    CaseTag,
    DecompositionFailure,
    MaterialPair,
    WaveOperator,
    build_wave_operator,
    example3_medium,
    example3_similarity,
    jordan_decompose,
    make_wavevector,
    principal_sqrt,
    random_medium,
)
from anisotropic_waves.misc import parallelism_residual


def example1_operator():
    eps = np.array([[2, 1j, 0], [-1j, 2, 0], [0, 0, 1]])
    materials = MaterialPair(eps_rel=eps, mu_rel=np.eye(3))
    return build_wave_operator(materials, make_wavevector(0, 0, 1))


def test_vacuum_operator_is_transverse_projector():
    op = build_wave_operator(MaterialPair.vacuum(), make_wavevector(0, 0, 1))
    np.testing.assert_allclose(op.matrix, np.diag([1, 1, 0]), atol=1e-15)


def test_example1_operator():
    op = example1_operator()
    expected = np.array([[2, -1j, 0], [1j, 2, 0], [0, 0, 0]]) / 3
    np.testing.assert_allclose(op.matrix, expected, atol=1e-15)


def test_null_residuals():
    rng = np.random.default_rng(3)
    materials, k = random_medium(rng)
    right, left = build_wave_operator(materials, k).null_residuals()
    assert right <= 1e-10
    assert left <= 1e-10 * np.linalg.cond(materials.eps_rel)


def test_decompose_vacuum():
    decomp = jordan_decompose(build_wave_operator(MaterialPair.vacuum(), make_wavevector(0, 0, 1)))
    assert decomp.case_tag == CaseTag.DIAGONALIZABLE
    assert decomp.lambda_minus == pytest.approx(1)
    assert decomp.lambda_plus == pytest.approx(1)
    assert decomp.reconstruction_residual() <= 1e-12


def test_decompose_example1():
    op = example1_operator()
    decomp = jordan_decompose(op)
    assert decomp.case_tag == CaseTag.DIAGONALIZABLE
    assert decomp.lambda_minus == pytest.approx(1, abs=1e-12)
    assert decomp.lambda_plus == pytest.approx(1 / 3, abs=1e-12)

    (_, minus), (_, plus) = decomp.eigenpairs()
    assert parallelism_residual(minus, [1, 1j, 0]) <= 1e-9
    assert parallelism_residual(plus, [1, -1j, 0]) <= 1e-9
    for lambda_, vector in decomp.eigenpairs():
        assert np.linalg.norm(op.matrix @ vector - lambda_ * vector) <= 1e-9 * op.norm


def test_decompose_example3():
    op = build_wave_operator(example3_medium(1, 1), make_wavevector(0, 0, 1))
    decomp = jordan_decompose(op)
    assert decomp.case_tag == CaseTag.DEFECTIVE
    assert decomp.lambda_ == pytest.approx(1, abs=1e-9)
    np.testing.assert_array_equal(decomp.J, [[0, 0, 0], [0, decomp.lambda_, 1], [0, 0, decomp.lambda_]])

    pairs = decomp.eigenpairs()
    assert len(pairs) == 1
    eigenvector = pairs[0][1]
    assert parallelism_residual(eigenvector, [1, 1j, 0]) <= 1e-9

    generalized = decomp.generalized_vector
    residual = op.matrix @ generalized - decomp.lambda_ * generalized - eigenvector
    assert np.linalg.norm(residual) <= 1e-9 * op.norm
    assert decomp.reconstruction_residual() <= 1e-9


def test_example3_similarity_reconstructs_operator():
    f, g = 4.0, 2.0
    op = build_wave_operator(example3_medium(f, g), make_wavevector(0, 0, 1))
    S, S_inv = example3_similarity(f, g)
    jordan = np.array([[0, 0, 0], [0, f, 1], [0, 0, f]])
    np.testing.assert_allclose(S @ S_inv, np.eye(3), atol=1e-15)
    np.testing.assert_allclose(S_inv @ jordan @ S, op.matrix, atol=1e-12)

    decomp = jordan_decompose(op)
    assert decomp.lambda_ == pytest.approx(f, abs=1e-9)
    assert parallelism_residual(decomp.S_inv[:, 1], S_inv[:, 1]) <= 1e-9


@pytest.mark.parametrize("g", [1e-6, 1e-3, 0.1, 1.0, -2.5, 1j, 0.5 - 0.5j])
def test_example3_is_defective_for_small_g(g):
    decomp = jordan_decompose(build_wave_operator(example3_medium(1.5, g), make_wavevector(0, 0, 1)))
    assert decomp.is_defective
    assert decomp.lambda_ == pytest.approx(1.5, abs=1e-9)


def test_diagonalizable_decomposition_has_no_jordan_data():
    decomp = jordan_decompose(example1_operator())
    with pytest.raises(ValueError):
        decomp.lambda_
    with pytest.raises(ValueError):
        decomp.generalized_vector


def test_random_media_reconstruct():
    rng = np.random.default_rng(4)
    for _ in range(20):
        materials, k = random_medium(rng)
        op = build_wave_operator(materials, k)
        decomp = jordan_decompose(op)
        assert decomp.reconstruction_residual() <= 1e-9
        np.testing.assert_allclose(decomp.S @ decomp.S_inv, np.eye(3), atol=1e-9)
        assert min(abs(value) for value in np.linalg.eigvals(op.matrix)) <= 1e-10 * op.norm
        for lambda_, vector in decomp.eigenpairs():
            assert np.linalg.norm(op.matrix @ vector - lambda_ * vector) <= 1e-9 * op.norm


def test_null_vector_is_wavevector_direction():
    rng = np.random.default_rng(5)
    materials, k = random_medium(rng)
    decomp = jordan_decompose(build_wave_operator(materials, k))
    assert parallelism_residual(decomp.null_vector, k.vector) <= 1e-12


def test_broken_null_invariant_is_rejected():
    k = make_wavevector(0, 0, 1)
    op = WaveOperator(matrix=np.eye(3), k=k, materials=MaterialPair.vacuum())
    with pytest.raises(DecompositionFailure):
        jordan_decompose(op)


@pytest.mark.parametrize(
    "value, expected",
    [(4, 2), (-1, 1j), (complex(-1, -0.0), 1j), (0, 0), (-4 + 0j, 2j)],
)
def test_principal_sqrt(value, expected):
    root = principal_sqrt(value)
    assert root.sqrt_lambda == pytest.approx(expected)
    assert root.lambda_ == value


def test_principal_sqrt_of_complex_value():
    value = (1 - 2j) / 5
    root = principal_sqrt(value).sqrt_lambda
    assert abs(root * root - value) <= 4 * np.finfo(np.float64).eps * abs(value)
    assert root.real > 0
