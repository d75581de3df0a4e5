from dataclasses import dataclass
import logging

import numpy as np

from .quadrature import quadrature_integral
from .runge_kutta import rk4_evolve
from .series import series_propagator
from ..core import MaterialPair, WaveVector
from ..propagate import FieldState, evolve, integral_pair, propagator_pair
from ..spectral import build_wave_operator, jordan_decompose
from ..misc import frobenius_norm

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleTolerances:
    series: float = 1e-10
    rk4: float = 1e-6
    quadrature: float = 1e-8


@dataclass(frozen=True)
class OracleErrors:
    """
    Largest disagreements between the closed-form pipeline and the three oracles for one medium.
    """

    series: float
    rk4: float
    quadrature: float

    def within(self, tolerances: OracleTolerances) -> bool:
        return bool(
            self.series <= tolerances.series
            and self.rk4 <= tolerances.rk4
            and self.quadrature <= tolerances.quadrature
        )


def verify_instance(
    m: MaterialPair,
    k: WaveVector,
    E0: np.ndarray,
    B0: np.ndarray,
    series_times: tuple[float, ...] = (0.5, 1.0, 2.0),
    rk4_time: float = 5.0,
    quadrature_time: float = 2.0,
) -> OracleErrors:
    """
    Compare the closed-form propagators and fields with the series, RK4 and Simpson oracles. Times are
    dimensionless (omega0 t).
    """
    op = build_wave_operator(m, k)
    decomp = jordan_decompose(op)
    omega0 = k.omega0

    series_error = 0.0
    for tau in series_times:
        series = series_propagator(op, tau)
        pair = propagator_pair(decomp, omega0, tau / omega0)
        scale = max(1.0, frobenius_norm(pair.C), frobenius_norm(pair.Sf))
        difference = max(frobenius_norm(series.C - pair.C), frobenius_norm(series.Sf - pair.Sf))
        series_error = max(series_error, difference / scale)

    t_end = rk4_time / omega0
    reference = evolve(FieldState(E=E0, B=B0, t=0.0, k=k), decomp, m, t_end)
    integrated = rk4_evolve(m, k, E0, B0, t_end, 1e-3 / omega0)
    reference_vector = np.concatenate([reference.E, reference.B])
    difference = np.concatenate([integrated.E - reference.E, integrated.B - reference.B])
    rk4_error = float(np.linalg.norm(difference) / np.linalg.norm(reference_vector))

    t_quadrature = quadrature_time / omega0
    integral_c, integral_sf = integral_pair(decomp, omega0, t_quadrature)
    quadrature_c, quadrature_sf = quadrature_integral(decomp, omega0, t_quadrature)
    scale = max(1.0, frobenius_norm(integral_c) * omega0, frobenius_norm(integral_sf) * omega0)
    difference = max(frobenius_norm(quadrature_c - integral_c), frobenius_norm(quadrature_sf - integral_sf))
    quadrature_error = difference * omega0 / scale

    errors = OracleErrors(series=series_error, rk4=rk4_error, quadrature=quadrature_error)
    _logger.debug(f"Oracle errors: {errors}")
    return errors
