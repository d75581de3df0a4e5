import numpy as np
import pytest

from anisotropic_waves import (
    PSEUDO_ONLY,
    MaterialPair,
    NoConvergence,
    OracleErrors,
    OracleTolerances,
    SamplingExhausted,
    Verdict,
    build_wave_operator,
    example1_initial_state,
    example1_medium,
    example1_reference_amplitudes,
    example3_medium,
    jordan_decompose,
    make_wavevector,
    maxwell_system,
    propagator_pair,
    quadrature_integral,
    integral_pair,
    random_example1_params,
    random_medium,
    rk4_evolve,
    rk4_order_factor,
    series_propagator,
    verify_instance,
)


def test_series_at_time_zero():
    op = build_wave_operator(MaterialPair.vacuum(), make_wavevector(0, 0, 1))
    result = series_propagator(op, 0.0)
    assert result.terms_used == 1
    np.testing.assert_array_equal(result.C, np.eye(3))
    np.testing.assert_array_equal(result.Sf, np.zeros((3, 3)))


def test_series_in_vacuum():
    op = build_wave_operator(MaterialPair.vacuum(), make_wavevector(0, 0, 1))
    result = series_propagator(op, 1.0, tol=1e-14)
    np.testing.assert_allclose(result.C, np.diag([np.cos(1), np.cos(1), 1]), atol=1e-13)
    np.testing.assert_allclose(result.Sf, np.diag([np.sin(1), np.sin(1), 1]), atol=1e-13)
    assert result.last_term_norm <= 1e-14


def test_series_matches_defective_closed_form():
    k = make_wavevector(0, 0, 1)
    op = build_wave_operator(example3_medium(1.5, 0.8), k)
    decomp = jordan_decompose(op)
    result = series_propagator(op, 2.0)
    pair = propagator_pair(decomp, k.omega0, 2.0)
    np.testing.assert_allclose(result.C, pair.C, atol=1e-10)
    np.testing.assert_allclose(result.Sf, pair.Sf, atol=1e-10)


def test_series_matches_closed_form_for_random_media():
    rng = np.random.default_rng(40)
    for _ in range(100):
        materials, k = random_medium(rng)
        op = build_wave_operator(materials, k)
        decomp = jordan_decompose(op)
        tau = rng.uniform(0, 2)
        result = series_propagator(op, tau)
        pair = propagator_pair(decomp, k.omega0, tau / k.omega0)
        scale = max(1.0, np.linalg.norm(pair.C), np.linalg.norm(pair.Sf))
        assert np.linalg.norm(result.C - pair.C) <= 1e-10 * scale
        assert np.linalg.norm(result.Sf - pair.Sf) <= 1e-10 * scale


def test_series_argument_checks():
    op = build_wave_operator(MaterialPair.vacuum(), make_wavevector(0, 0, 1))
    with pytest.raises(ValueError):
        series_propagator(op, 1.0, max_terms=5)
    with pytest.raises(ValueError):
        series_propagator(op, 100.0)
    with pytest.raises(NoConvergence) as info:
        series_propagator(op, 20.0, tol=1e-30, max_terms=10)
    assert info.value.terms_used == 10


def test_maxwell_system_layout():
    k = make_wavevector(0, 0, 1, c=2)
    system = maxwell_system(MaterialPair.vacuum(), k)
    assert system.shape == (6, 6)
    np.testing.assert_array_equal(system[:3, :3], np.zeros((3, 3)))
    np.testing.assert_array_equal(system[3:, 3:], np.zeros((3, 3)))
    np.testing.assert_allclose(system[:3, 3:], -4 * system[3:, :3])


def test_rk4_vacuum_period():
    k = make_wavevector(0, 0, 1)
    E0, B0 = np.array([1, 0, 0]), np.array([0, 1, 0])
    state = rk4_evolve(MaterialPair.vacuum(), k, E0, B0, 2 * np.pi, 1e-3)
    assert state.t == 2 * np.pi
    np.testing.assert_allclose(state.E, E0, atol=1e-10)
    np.testing.assert_allclose(state.B, B0, atol=1e-10)


def test_rk4_without_steps():
    k = make_wavevector(0, 0, 1)
    state = rk4_evolve(MaterialPair.vacuum(), k, [1, 2, 3], [4, 5, 6], 0.0, 0.1)
    np.testing.assert_array_equal(state.E, [1, 2, 3])
    with pytest.raises(ValueError):
        rk4_evolve(MaterialPair.vacuum(), k, [1, 0, 0], [0, 0, 0], 1.0, 0.0)
    with pytest.raises(ValueError):
        rk4_evolve(MaterialPair.vacuum(), k, [1, 0, 0], [0, 0, 0], -1.0, 0.1)


def test_rk4_follows_growing_pseudo_hermitian_wave():
    initial = example1_initial_state(1.0, 0.5, 1.0)
    state = rk4_evolve(example1_medium(PSEUDO_ONLY), initial.k, initial.E, initial.B, 5.0, 1e-3)
    E, B = example1_reference_amplitudes(PSEUDO_ONLY, 1.0, 0.5, 1.0, 5.0)
    scale = np.linalg.norm(np.concatenate([E, B]))
    assert np.linalg.norm(np.concatenate([state.E - E, state.B - B])) <= 1e-6 * scale


def test_rk4_is_fourth_order():
    rng = np.random.default_rng(41)
    for _ in range(5):
        materials, k = random_medium(rng)
        E0 = rng.normal(size=3) + 1j * rng.normal(size=3)
        B0 = rng.normal(size=3) + 1j * rng.normal(size=3)
        factor = rk4_order_factor(materials, k, E0, B0, 1.0 / k.omega0, 0.05 / k.omega0)
        assert 12 <= factor <= 20


def test_quadrature_of_vacuum_propagators():
    k = make_wavevector(0, 0, 1)
    decomp = jordan_decompose(build_wave_operator(MaterialPair.vacuum(), k))
    integral_c, integral_sf = quadrature_integral(decomp, k.omega0, 1.0)
    np.testing.assert_allclose(integral_c, np.diag([np.sin(1), np.sin(1), 1]), atol=1e-12)
    np.testing.assert_allclose(integral_sf, np.diag([1 - np.cos(1), 1 - np.cos(1), 0.5]), atol=1e-12)


def test_quadrature_of_defective_propagators():
    k = make_wavevector(0, 0, 2)
    decomp = jordan_decompose(build_wave_operator(example3_medium(0.5, 1.0), k))
    exact = integral_pair(decomp, k.omega0, 1.0)
    numeric = quadrature_integral(decomp, k.omega0, 1.0)
    for closed_form, simpson in zip(exact, numeric):
        np.testing.assert_allclose(simpson, closed_form, atol=1e-10)


@pytest.mark.parametrize("n_panels", [0, 3])
def test_quadrature_panel_count(n_panels):
    k = make_wavevector(0, 0, 1)
    decomp = jordan_decompose(build_wave_operator(MaterialPair.vacuum(), k))
    with pytest.raises(ValueError):
        quadrature_integral(decomp, k.omega0, 1.0, n_panels=n_panels)


def test_random_media_are_acceptable():
    rng = np.random.default_rng(42)
    for _ in range(20):
        materials, k = random_medium(rng)
        assert np.linalg.cond(materials.eps_rel) <= 100
        assert np.linalg.cond(materials.mu_rel) <= 100
        op = build_wave_operator(materials, k)
        assert op.norm <= 10
        assert not jordan_decompose(op).is_defective


def test_random_medium_keeps_given_wavevector():
    k = make_wavevector(0, 1, 0)
    _, drawn = random_medium(np.random.default_rng(43), k=k)
    assert drawn is k


def test_random_medium_gives_up():
    with pytest.raises(SamplingExhausted) as error:
        random_medium(np.random.default_rng(44), max_condition=1.0, max_attempts=5)
    assert error.value.attempts == 5
    assert isinstance(error.value, RuntimeError)


def test_random_example1_params_are_reproducible():
    first = random_example1_params(np.random.default_rng(45), Verdict.PSEUDO_HERMITIAN_ONLY)
    second = random_example1_params(np.random.default_rng(45), Verdict.PSEUDO_HERMITIAN_ONLY)
    assert first == second


def test_oracle_errors_within():
    tolerances = OracleTolerances()
    assert OracleErrors(series=1e-12, rk4=1e-8, quadrature=1e-10).within(tolerances)
    assert not OracleErrors(series=1e-12, rk4=1e-5, quadrature=1e-10).within(tolerances)


def test_verify_random_instances():
    rng = np.random.default_rng(46)
    for _ in range(100):
        materials, k = random_medium(rng)
        E0 = rng.normal(size=3) + 1j * rng.normal(size=3)
        B0 = rng.normal(size=3) + 1j * rng.normal(size=3)
        errors = verify_instance(materials, k, E0, B0, rk4_time=5.0)
        assert errors.rk4 <= 1e-6
        assert errors.within(OracleTolerances())
