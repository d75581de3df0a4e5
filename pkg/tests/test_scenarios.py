from dataclasses import asdict
import logging

import numpy as np
import pytest

from anisotropic_waves import (
    HERMITIAN,
    PSEUDO_ONLY,
    QUASI,
    DegenerateDenominator,
    Example1Params,
    Example2Params,
    Preset,
    ScenarioConfig,
    SingularMatrix,
    Verdict,
    WaveVector,
    build_wave_operator,
    evolve,
    evolve_many,
    example1_initial_state,
    example1_lambdas,
    example1_medium,
    example1_reference_amplitudes,
    example1_reference_fields,
    example2_lambda0,
    example2_medium,
    example2_polarizations,
    example2_special_case,
    example3_initial_state,
    example3_medium,
    example3_reference_fields,
    jordan_decompose,
    make_wavevector,
    random_example1_params,
)
from anisotropic_waves.misc import parallelism_residual


def relative_error(actual, expected):
    return np.linalg.norm(np.asarray(actual) - np.asarray(expected)) / max(1.0, np.linalg.norm(expected))


def run(scenario, times):
    materials = scenario.materials()
    initial = scenario.initial_state()
    decomp = jordan_decompose(build_wave_operator(materials, initial.k))
    return evolve_many(initial, decomp, materials, times)


def test_example1_medium_tensors():
    materials = example1_medium(QUASI)
    expected_eps = np.array([[2 + 1j, 1j, 0], [-1j, 2 + 1j, 0], [0, 0, 1]])
    expected_mu = np.array([[1 - 0.5j, 0.5j, 0], [-0.5j, 1 - 0.5j, 0], [0, 0, 1]])
    np.testing.assert_array_equal(materials.eps_rel, expected_eps)
    np.testing.assert_array_equal(materials.mu_rel, expected_mu)


@pytest.mark.parametrize("params", [HERMITIAN, QUASI, PSEUDO_ONLY])
def test_example1_circular_polarizations_are_eigenvectors(params):
    op = build_wave_operator(example1_medium(params), make_wavevector(0, 0, 1))
    lambda_minus, lambda_plus = example1_lambdas(params)
    left = np.array([1, 1j, 0])
    right = np.array([1, -1j, 0])
    np.testing.assert_allclose(op.matrix @ left, lambda_minus * left, atol=1e-12)
    np.testing.assert_allclose(op.matrix @ right, lambda_plus * right, atol=1e-12)


def test_example1_lambdas_of_named_sets():
    assert example1_lambdas(HERMITIAN) == pytest.approx((2, 2 / 9))
    assert example1_lambdas(PSEUDO_ONLY) == pytest.approx(((1 - 2j) / 5, (1 + 2j) / 5))


def test_example1_degenerate_denominator():
    with pytest.raises(DegenerateDenominator):
        example1_lambdas(Example1Params(eps1=1.0, mu1=1.0, alpha=1.0))


def test_example1_reference_starts_from_initial_state():
    phi = 0.3
    n_E, n_B = example1_reference_fields(QUASI, 1.0, phi, 1.0, 0.0)
    np.testing.assert_allclose(n_E, [np.cos(phi), np.sin(phi), 0], atol=1e-15)
    np.testing.assert_allclose(n_B, 0, atol=1e-15)


def test_example1_reference_scales_with_amplitude():
    amplitude, phi, k3, t = 0.5 - 2j, 0.6, -2.0, 1.7
    unit_E, unit_B = example1_reference_fields(PSEUDO_ONLY, 1.0, phi, k3, t)
    n_E, n_B = example1_reference_fields(PSEUDO_ONLY, amplitude, phi, k3, t)
    np.testing.assert_allclose(n_E, amplitude * unit_E, rtol=1e-15)
    np.testing.assert_allclose(n_B, amplitude * unit_B, rtol=1e-15)
    E, B = example1_reference_amplitudes(PSEUDO_ONLY, amplitude, phi, k3, t)
    np.testing.assert_array_equal(E, n_E)
    np.testing.assert_allclose(B, 1j * n_B, rtol=1e-15)


@pytest.mark.parametrize("params", [HERMITIAN, QUASI, PSEUDO_ONLY])
@pytest.mark.parametrize("k3", [1.0, -1.5])
def test_example1_pipeline_matches_closed_form(params, k3):
    amplitude, phi, c = 0.8 - 0.2j, 0.4, 2.0
    scenario = ScenarioConfig(
        preset=Preset.EXAMPLE1, k=WaveVector(0, 0, k3, c), parameters=asdict(params), amplitude=amplitude, angle=phi
    )
    times = np.linspace(0, 20 / scenario.k.omega0, 200)
    for state, t in zip(run(scenario, times), times):
        E, B = example1_reference_amplitudes(params, amplitude, phi, k3, t, c)
        assert relative_error(state.E, E) <= 1e-10
        assert relative_error(state.B, B) <= 1e-10
        expected = scenario.reference_fields(t)
        np.testing.assert_array_equal(expected[0], E)


@pytest.mark.parametrize("kind", list(Verdict))
def test_example1_pipeline_matches_closed_form_for_random_parameters(kind):
    rng = np.random.default_rng(30 + list(Verdict).index(kind))
    initial = example1_initial_state(1.0, 0.7, 1.0)
    times = np.linspace(0, 20 / initial.k.omega0, 200)
    for _ in range(20):
        params = random_example1_params(rng, kind)
        materials = example1_medium(params)
        decomp = jordan_decompose(build_wave_operator(materials, initial.k))
        for state, t in zip(evolve_many(initial, decomp, materials, times), times):
            E, B = example1_reference_amplitudes(params, 1.0, 0.7, 1.0, t)
            assert relative_error(state.E, E) <= 1e-10
            assert relative_error(state.B, B) <= 1e-10


def test_quasi_hermitian_waves_stay_bounded():
    initial = example1_initial_state(1.0, 0.0, 1.0)
    times = np.linspace(0, 1000, 10000)
    for params in (HERMITIAN, QUASI):
        lambdas = example1_lambdas(params)
        assert all(value.real > 0 and abs(value.imag) <= 1e-10 for value in lambdas)
        materials = example1_medium(params)
        decomp = jordan_decompose(build_wave_operator(materials, initial.k))
        for state in evolve_many(initial, decomp, materials, times):
            # With a unit amplitude E is the profile n_E itself
            assert np.max(np.abs(state.E)) <= 1 + 1e-12
        profiles = np.array([example1_reference_fields(params, 1.0, 0.0, 1.0, t)[0] for t in times])
        assert np.max(np.abs(profiles)) <= 1 + 1e-12


def test_pseudo_hermitian_waves_conserve_phase():
    rng = np.random.default_rng(33)
    parameter_sets = [PSEUDO_ONLY] + [random_example1_params(rng, Verdict.PSEUDO_HERMITIAN_ONLY) for _ in range(5)]
    initial = example1_initial_state(1.0, 0.3, 1.0)
    for params in parameter_sets:
        materials = example1_medium(params)
        decomp = jordan_decompose(build_wave_operator(materials, initial.k))
        for state in evolve_many(initial, decomp, materials, np.linspace(0, 20, 200)):
            # E carries n_E and B carries -i n_B, both real profiles
            assert np.max(np.abs(state.E.imag)) <= 1e-10 * max(1.0, np.linalg.norm(state.E))
            assert np.max(np.abs(state.B.real)) <= 1e-10 * max(1.0, np.linalg.norm(state.B))


def test_pseudo_hermitian_waves_grow():
    initial = example1_initial_state(1.0, 0.0, 1.0)
    materials = example1_medium(PSEUDO_ONLY)
    decomp = jordan_decompose(build_wave_operator(materials, initial.k))
    assert np.linalg.norm(evolve(initial, decomp, materials, 20.0).E) > 100


def test_example2_special_case_matrix():
    params = example2_special_case(c=2.0, u=1.0)
    np.testing.assert_allclose(params.matrix, [[1, 0.5, 1], [0.5, 1, 1], [1, 1, 2]])
    assert example2_lambda0(*params.as_tuple(), k=make_wavevector(0, 0, 1)) == pytest.approx(4)


@pytest.mark.parametrize("c, u", [(2.0, 1.0), (1 + 0.5j, 0.3), (0.7, -0.2 + 0.1j)])
def test_example2_special_case_eigenvalue(c, u):
    params = example2_special_case(c, u)
    assert example2_lambda0(*params.as_tuple(), k=make_wavevector(0, 0, 3)) == pytest.approx(c * c, abs=1e-12)


@pytest.mark.parametrize(
    "params, k",
    [
        (Example2Params(a=1, b=2, c=3, g=0.1, h=-0.2, u=0.3), make_wavevector(1, 2, 3)),
        (Example2Params(a=1 + 0.2j, b=0.5, c=2 - 0.1j, g=0.3j, h=0.4, u=-0.1), make_wavevector(-0.5, 1, 0.2)),
    ],
)
def test_example2_doubly_degenerate_eigenvalue(params, k):
    lambda0 = example2_lambda0(*params.as_tuple(), k=k)
    op = build_wave_operator(example2_medium(*params.as_tuple()), k)
    eigenvalues = sorted(np.linalg.eigvals(op.matrix), key=abs)
    assert abs(eigenvalues[0]) <= 1e-12 * op.norm
    assert eigenvalues[1] == pytest.approx(lambda0, rel=1e-7)
    assert eigenvalues[2] == pytest.approx(lambda0, rel=1e-7)

    first, second = example2_polarizations(params, k)
    np.testing.assert_allclose(op.matrix @ first, lambda0 * first, atol=1e-10 * op.norm)
    np.testing.assert_allclose(op.matrix @ second, lambda0 * second, atol=1e-10 * op.norm)
    assert np.linalg.matrix_rank(np.stack([first, second])) == 2


def test_example2_special_case_for_random_parameters():
    rng = np.random.default_rng(35)
    k = make_wavevector(0, 0, 1)
    for _ in range(20):
        c = rng.uniform(0.5, 2.0) * np.exp(1j * rng.uniform(-0.5, 0.5))
        u = complex(rng.uniform(-1, 1), rng.uniform(-0.5, 0.5))
        params = example2_special_case(c, u)
        assert abs(example2_lambda0(*params.as_tuple(), k=k) - c * c) <= 1e-10 * abs(c * c)

        decomp = jordan_decompose(build_wave_operator(example2_medium(*params.as_tuple()), k))
        assert not decomp.is_defective
        assert abs(decomp.lambda_minus - c * c) <= 1e-9 * abs(c * c)
        assert abs(decomp.lambda_plus - c * c) <= 1e-9 * abs(c * c)


def random_symmetric_params(rng):
    # A diagonal in [1, 2] keeps Re(k^T Lambda k) >= 0.4 |k|^2 against the perturbation
    perturbation = 0.2 * (rng.uniform(-1, 1, 6) + 1j * rng.uniform(-1, 1, 6))
    a, b, c = rng.uniform(1, 2, 3) + perturbation[:3]
    return Example2Params(a=a, b=b, c=c, g=perturbation[3], h=perturbation[4], u=perturbation[5])


def test_example2_eigenvalue_for_random_symmetric_matrices():
    rng = np.random.default_rng(36)
    for _ in range(50):
        params = random_symmetric_params(rng)
        k = WaveVector(*rng.normal(size=3))
        lambda0 = example2_lambda0(*params.as_tuple(), k=k)
        op = build_wave_operator(example2_medium(*params.as_tuple()), k)
        eigenvalues = sorted(np.linalg.eigvals(op.matrix), key=abs)
        assert abs(eigenvalues[0]) <= 1e-12 * op.norm
        assert abs(eigenvalues[1] - lambda0) <= 1e-9 * abs(lambda0)
        assert abs(eigenvalues[2] - lambda0) <= 1e-9 * abs(lambda0)

        first, second = example2_polarizations(params, k)
        np.testing.assert_allclose(op.matrix @ first, lambda0 * first, atol=1e-10 * op.norm)
        np.testing.assert_allclose(op.matrix @ second, lambda0 * second, atol=1e-10 * op.norm)
        assert np.linalg.matrix_rank(np.stack([first, second])) == 2


def test_example2_singular_matrix():
    with pytest.raises(DegenerateDenominator):
        example2_lambda0(1, 1, 1, 1, 1, 1, k=make_wavevector(0, 0, 1))


def test_example3_rejects_degenerate_parameters():
    with pytest.raises(SingularMatrix) as error:
        example3_medium(0.0, 1.0)
    assert error.value.determinant == 0
    assert not isinstance(error.value, ValueError)
    with pytest.raises(ValueError):
        example3_medium(1.0, 0.0)


def test_example3_printed_variant():
    f, g = 2.0, 0.5
    decomp = jordan_decompose(build_wave_operator(example3_medium(f, g, as_printed=True), make_wavevector(0, 0, 1)))
    assert decomp.is_defective
    assert decomp.lambda_ == pytest.approx(1 / f, abs=1e-6)


def test_example3_quarter_period():
    scenario = ScenarioConfig(preset=Preset.EXAMPLE3, k=make_wavevector(0, 0, 1), parameters={"f": 1.0, "g": 1.0})
    (state,) = run(scenario, [np.pi / 2])
    np.testing.assert_allclose(state.E, [1j * np.pi / 2, -np.pi / 2, 0], atol=1e-10)
    E, B = scenario.reference_fields(np.pi / 2)
    assert relative_error(state.E, E) <= 1e-10
    assert relative_error(state.B, B) <= 1e-10


def test_example3_grows_linearly():
    f, g = 4.0, 0.5
    scenario = ScenarioConfig(preset=Preset.EXAMPLE3, k=make_wavevector(0, 0, 1), parameters={"f": f, "g": g})
    times = [(np.pi / 2 + 2 * np.pi * n) / np.sqrt(f) for n in (5, 10, 20)]
    for state, t in zip(run(scenario, times), times):
        envelope = np.sqrt(2) * abs(g) * t / np.sqrt(f)
        assert np.linalg.norm(state.E) == pytest.approx(envelope, rel=1e-9)


def test_axis_presets_drop_transverse_wavevector(caplog):
    with caplog.at_level(logging.WARNING):
        scenario = ScenarioConfig(preset="example1", k=make_wavevector(1, 2, 3), parameters=asdict(QUASI))
    assert scenario.preset == Preset.EXAMPLE1
    assert scenario.k == make_wavevector(0, 0, 3)
    assert "z axis" in caplog.text


def test_custom_scenario_needs_both_tensors():
    with pytest.raises(ValueError):
        ScenarioConfig(preset=Preset.CUSTOM, k=make_wavevector(1, 0, 0), eps_rel=np.eye(3))


def test_reference_only_for_default_initial_state():
    scenario = ScenarioConfig(
        preset=Preset.EXAMPLE3, k=make_wavevector(0, 0, 1), parameters={"f": 1.0, "g": 1.0}, E0=np.array([1, 0, 0])
    )
    assert not scenario.has_reference
    with pytest.raises(ValueError):
        scenario.reference_fields(1.0)

    identity = {"a": 1, "b": 1, "c": 1, "g": 0, "h": 0, "u": 0}
    example2 = ScenarioConfig(preset=Preset.EXAMPLE2, k=make_wavevector(0, 0, 1), parameters=identity)
    assert not example2.has_reference
    np.testing.assert_array_equal(example2.initial_state().E, [1, 0, 0])


def test_example3_random_parameters():
    rng = np.random.default_rng(34)
    k = make_wavevector(0, 0, 1)
    for _ in range(20):
        f = rng.uniform(0.5, 2.0)
        g = rng.choice([-1, 1]) * rng.uniform(0.1, 1.0)
        decomp = jordan_decompose(build_wave_operator(example3_medium(f, g), k))
        assert decomp.is_defective
        assert abs(decomp.lambda_ - f) <= 1e-9
        ((_, polarization),) = decomp.eigenpairs()
        assert parallelism_residual(polarization, [1, 1j, 0]) <= 1e-9

        initial = example3_initial_state(1.0, 1.0)
        for state in evolve_many(initial, decomp, example3_medium(f, g), [0.5, 5.0, 50.0]):
            E, B = example3_reference_fields(1.0, f, g, 1.0, state.t)
            assert relative_error(state.E, E) <= 1e-10
            assert relative_error(state.B, B) <= 1e-10
