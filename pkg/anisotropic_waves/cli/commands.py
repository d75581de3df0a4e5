from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
import logging

import numpy as np

from .config import RunConfig, SweepConfig, format_complex, parameter_names
from .output import Table, complex_cells, complex_columns
from ..core import MaterialPair
from ..hermiticity import Example1Params, HermiticityClass, classify, example1_conditions
from ..oracle import OracleTolerances, random_medium, verify_instance
from ..propagate import evolve_many, time_harmonic_modes
from ..scenarios import Preset, ScenarioConfig
from ..spectral import SpectralDecomposition, WaveOperator, build_wave_operator, jordan_decompose, principal_sqrt
from ..misc import ConfigError

_logger = logging.getLogger(__name__)

FIELD_COLUMNS = ["t"] + [
    column for name in ("E1", "E2", "E3", "B1", "B2", "B3") for column in complex_columns(name)
]


@dataclass(frozen=True)
class Analysis:
    scenario: ScenarioConfig
    materials: MaterialPair
    operator: WaveOperator
    decomposition: SpectralDecomposition
    hermiticity: HermiticityClass


def analyze(scenario: ScenarioConfig) -> Analysis:
    materials = scenario.materials()
    operator = build_wave_operator(materials, scenario.k)
    decomposition = jordan_decompose(operator)
    return Analysis(
        scenario=scenario,
        materials=materials,
        operator=operator,
        decomposition=decomposition,
        hermiticity=classify(decomposition, operator),
    )


def _metadata(config: RunConfig, analysis: Analysis) -> dict:
    return {
        "preset": config.medium.preset.value,
        "parameters": {name: format_complex(complex(value)) for name, value in config.medium.parameters.items()},
        "k": list(analysis.scenario.k.vector),
        "c": config.c,
        "case": analysis.decomposition.case_tag.value,
        "verdict": analysis.hermiticity.verdict.label,
    }


def cmd_classify(config: RunConfig) -> Table:
    analysis = analyze(config.scenario())
    decomposition, hermiticity = analysis.decomposition, analysis.hermiticity
    closed_form = ""
    if config.medium.preset == Preset.EXAMPLE1:
        closed_form = example1_conditions(Example1Params(**analysis.scenario.parameters)).label

    table = Table(
        columns=[
            "case",
            *complex_columns("lambda_minus"),
            *complex_columns("lambda_plus"),
            *complex_columns("sqrt_lambda_minus"),
            *complex_columns("sqrt_lambda_plus"),
            "verdict",
            "closed_form_verdict",
            "pseudo_residual",
            "eigenvalue_reality_defect",
            "conjugation_defect",
            "metric_pseudo",
            "spectrum_pseudo",
            "modes",
        ],
        metadata=_metadata(config, analysis),
    )
    table.rows.append(
        [
            decomposition.case_tag.value,
            *complex_cells(decomposition.lambda_minus),
            *complex_cells(decomposition.lambda_plus),
            *complex_cells(principal_sqrt(decomposition.lambda_minus).sqrt_lambda),
            *complex_cells(principal_sqrt(decomposition.lambda_plus).sqrt_lambda),
            hermiticity.verdict.label,
            closed_form,
            hermiticity.pseudo_residual,
            hermiticity.eigenvalue_reality_defect,
            hermiticity.conjugation_defect,
            hermiticity.metric_pseudo,
            hermiticity.spectrum_pseudo,
            len(time_harmonic_modes(decomposition, analysis.scenario.k)),
        ]
    )
    _logger.info(f"Classified {config.medium.preset.value} as {hermiticity.verdict.label}")
    return table


def cmd_propagate(config: RunConfig) -> Table:
    scenario = config.scenario()
    analysis = analyze(scenario)
    times = config.times()
    states = evolve_many(scenario.initial_state(), analysis.decomposition, analysis.materials, times)

    table = Table(columns=FIELD_COLUMNS, metadata=_metadata(config, analysis))
    for state in states:
        row = [state.t]
        for value in (*state.E, *state.B):
            row += complex_cells(value)
        table.rows.append(row)
    _logger.info(f"Propagated {config.medium.preset.value} over {len(times)} samples")
    return table


def cmd_modes(config: RunConfig) -> Table:
    analysis = analyze(config.scenario())
    table = Table(
        columns=[
            "mode",
            "sense",
            *complex_columns("lambda"),
            *complex_columns("sqrt_lambda"),
            "growth_rate",
            *complex_columns("p1"),
            *complex_columns("p2"),
            *complex_columns("p3"),
        ],
        metadata=_metadata(config, analysis),
    )
    for index, mode in enumerate(time_harmonic_modes(analysis.decomposition, analysis.scenario.k)):
        row = [index, mode.sense.value, *complex_cells(mode.lambda_), *complex_cells(mode.sqrt_lambda)]
        row.append(mode.growth_rate)
        for value in mode.polarization:
            row += complex_cells(value)
        table.rows.append(row)
    return table


def cmd_verify(
    seed: int, n_instances: int, tolerances: OracleTolerances = OracleTolerances()
) -> tuple[Table, bool]:
    """
    Run the oracle comparisons on random media.

    Returns
    -------
    The per-instance errors and whether every instance is within tolerances
    """
    if n_instances < 1:
        raise ConfigError(f"The number of instances must be at least 1, got {n_instances}")

    # Draws are sequential so that the instances only depend on the seed
    rng = np.random.default_rng(seed)
    instances = []
    for _ in range(n_instances):
        materials, k = random_medium(rng)
        E0 = rng.uniform(-1, 1, 3) + 1j * rng.uniform(-1, 1, 3)
        B0 = rng.uniform(-1, 1, 3) + 1j * rng.uniform(-1, 1, 3)
        instances.append((materials, k, E0, B0))

    with ThreadPoolExecutor() as executor:
        errors = list(executor.map(lambda instance: verify_instance(*instance), instances))

    table = Table(columns=["instance", "series_error", "rk4_error", "quadrature_error", "passed"])
    for index, result in enumerate(errors):
        table.rows.append([index, result.series, result.rk4, result.quadrature, result.within(tolerances)])
    passed = all(result.within(tolerances) for result in errors)
    table.metadata = {
        "seed": seed,
        "instances": n_instances,
        "max_series_error": max(result.series for result in errors),
        "max_rk4_error": max(result.rk4 for result in errors),
        "max_quadrature_error": max(result.quadrature for result in errors),
        "tolerances": {"series": tolerances.series, "rk4": tolerances.rk4, "quadrature": tolerances.quadrature},
        "passed": passed,
    }
    return table, passed


def cmd_sweep(config: RunConfig, sweep: SweepConfig) -> Table:
    """
    Classify the medium for every value of one parameter. Linked parameters follow as multiples of the swept value.
    """
    names = parameter_names(config.medium.preset, config.medium.special_case)
    for name in (sweep.parameter, *sweep.linked):
        if name.partition(".")[0] not in names:
            raise ConfigError(f"Preset {config.medium.preset.value} has no parameter {name!r}")

    def row(value: float) -> list:
        medium = config.medium.with_parameter(sweep.parameter, value)
        for name, multiplier in sweep.linked.items():
            medium = medium.with_parameter(name, multiplier * value)
        analysis = analyze(replace(config, medium=medium).scenario())
        modes = time_harmonic_modes(analysis.decomposition, analysis.scenario.k)
        return [
            value,
            analysis.hermiticity.verdict.label,
            analysis.decomposition.case_tag.value,
            *complex_cells(analysis.decomposition.lambda_minus),
            *complex_cells(analysis.decomposition.lambda_plus),
            max(mode.growth_rate for mode in modes),
        ]

    with ThreadPoolExecutor() as executor:
        rows = list(executor.map(row, sweep.values()))

    return Table(
        columns=[
            sweep.parameter,
            "verdict",
            "case",
            *complex_columns("lambda_minus"),
            *complex_columns("lambda_plus"),
            "max_growth_rate",
        ],
        rows=rows,
        metadata={"preset": config.medium.preset.value, "sweep": sweep.to_dict()},
    )
