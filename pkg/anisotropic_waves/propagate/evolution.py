from dataclasses import dataclass
from typing import Iterable
import logging

import numpy as np

from .propagator import integral_pair, propagator_pair
from ..core import MaterialPair, WaveVector, build_curl
from ..spectral import SpectralDecomposition
from ..misc import Tolerances, as_vector3

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldState:
    """
    Complex plane-wave amplitudes of the electric field E and the magnetic induction B at time t for the
    wavevector k.
    """

    E: np.ndarray
    B: np.ndarray
    t: float
    k: WaveVector

    def __post_init__(self):
        object.__setattr__(self, "E", as_vector3(self.E))
        object.__setattr__(self, "B", as_vector3(self.B))
        object.__setattr__(self, "t", float(self.t))

    def gauss_constraints(self, materials: MaterialPair) -> tuple[complex, complex]:
        """
        The conserved quantities k^dagger eps E and k^dagger B.
        """
        return complex(self.k.vector @ materials.eps_rel @ self.E), complex(self.k.vector @ self.B)


def electric_rate(state: FieldState, materials: MaterialPair) -> np.ndarray:
    """
    dE/dt = c^2 eps^-1 D mu^-1 B from the Ampere law of a source-free medium.
    """
    curl = build_curl(state.k)
    return state.k.c**2 * materials.eps_inv @ curl @ materials.mu_inv @ state.B


def evolve(initial: FieldState, decomp: SpectralDecomposition, m: MaterialPair, t: float) -> FieldState:
    """
    Propagate a plane wave from initial.t to t with the closed-form propagators.

    Parameters
    ----------
    initial
        The fields at the start of the propagation
    decomp
        The Jordan decomposition of the wave operator built from m and initial.k
    m
        The medium
    t
        The time at which the fields are requested

    Returns
    -------
    The fields at time t
    """
    k = initial.k
    omega0 = k.omega0
    duration = t - initial.t
    if duration == 0:
        return initial

    rate = electric_rate(initial, m)
    # The rate lies in the range of eps^-1 D, so its null-mode coordinate vanishes for consistent data
    null_coordinate = abs((decomp.S @ rate)[0])
    if null_coordinate > Tolerances.null * max(1.0, float(np.linalg.norm(rate))):
        _logger.warning(
            f"Initial data excite the null mode ({null_coordinate:.3e}); the decomposition may not match the medium"
        )

    pair = propagator_pair(decomp, omega0, duration)
    integral_c, integral_sf = integral_pair(decomp, omega0, duration)
    E = pair.C @ initial.E + pair.Sf @ rate / omega0
    B = initial.B - build_curl(k) @ (integral_c @ initial.E + integral_sf @ rate / omega0)
    return FieldState(E=E, B=B, t=t, k=k)


def evolve_many(
    initial: FieldState, decomp: SpectralDecomposition, m: MaterialPair, times: Iterable[float]
) -> list[FieldState]:
    return [evolve(initial, decomp, m, t) for t in times]
