from dataclasses import dataclass
from typing import Callable

import numpy as np

from .block_functions import cos_block, integral_cos_block, integral_sinc_block, sinc_block
from ..spectral import SpectralDecomposition
from ..misc import as_matrix3


@dataclass(frozen=True)
class PropagatorPair:
    """
    C = cos(Omega omega0 t) and Sf = Omega^-1 sin(Omega omega0 t), so that E(t) = C E0 + Sf dE0/dt / omega0.
    Sf is dimensionless and equals omega0 t on the null mode.
    """

    C: np.ndarray
    Sf: np.ndarray
    t: float
    omega0: float

    def __post_init__(self):
        object.__setattr__(self, "C", as_matrix3(self.C))
        object.__setattr__(self, "Sf", as_matrix3(self.Sf))


def _validate(omega0: float, t: float) -> float:
    if not omega0 > 0:
        raise ValueError(f"omega0 must be positive, got {omega0}")
    if not np.isfinite(t):
        raise ValueError(f"t must be finite, got {t}")
    return float(omega0) * float(t)


def matrix_function(
    decomp: SpectralDecomposition, function: Callable[[complex, float], tuple[complex, complex]], tau: float
) -> np.ndarray:
    """
    Evaluate a scalar block function on the Jordan form and conjugate back, S^-1 f(J) S.
    """
    jordan = np.zeros((3, 3), dtype=np.complex128)
    jordan[0, 0] = function(0j, tau)[0]
    if decomp.is_defective:
        value, derivative = function(decomp.lambda_, tau)
        jordan[1, 1] = jordan[2, 2] = value
        jordan[1, 2] = derivative
    else:
        jordan[1, 1] = function(decomp.lambda_minus, tau)[0]
        jordan[2, 2] = function(decomp.lambda_plus, tau)[0]
    return decomp.S_inv @ jordan @ decomp.S


def propagator_pair(decomp: SpectralDecomposition, omega0: float, t: float) -> PropagatorPair:
    tau = _validate(omega0, t)
    if tau == 0:
        return PropagatorPair(C=np.eye(3), Sf=np.zeros((3, 3)), t=float(t), omega0=float(omega0))
    return PropagatorPair(
        C=matrix_function(decomp, cos_block, tau),
        Sf=matrix_function(decomp, sinc_block, tau),
        t=float(t),
        omega0=float(omega0),
    )


def integral_pair(decomp: SpectralDecomposition, omega0: float, t: float) -> tuple[np.ndarray, np.ndarray]:
    """
    The time integrals int_0^t C(s) ds and int_0^t Sf(s) ds, both carrying units of time.

    Returns
    -------
    (IC, ISf)
    """
    tau = _validate(omega0, t)
    if tau == 0:
        return as_matrix3(np.zeros((3, 3))), as_matrix3(np.zeros((3, 3)))
    return (
        as_matrix3(matrix_function(decomp, integral_cos_block, tau) / omega0),
        as_matrix3(matrix_function(decomp, integral_sinc_block, tau) / omega0),
    )
