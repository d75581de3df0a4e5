"""
Uniaxial gyrotropic medium with loss or gain, with a plane wave travelling along the optical axis.
"""

import numpy as np

from ..core import MaterialPair, WaveVector
from ..hermiticity import Example1Params
from ..misc import DegenerateDenominator
from ..propagate import FieldState
from ..spectral import principal_sqrt

HERMITIAN = Example1Params(eps1=2.0, mu1=1.0, alpha=1.0, beta=0.5)
QUASI = Example1Params(eps1=2.0, mu1=1.0, alpha=1.0, beta=0.5, gamma_eps=1.0, gamma_mu=-0.5)
PSEUDO_ONLY = Example1Params(eps1=1.0, mu1=1.0, alpha=1.0, beta=-1.0, gamma_eps=1.0, gamma_mu=-1.0)


def _uniaxial(diagonal: complex, gyration: float, axis: float) -> np.ndarray:
    return np.array(
        [
            [diagonal, 1j * gyration, 0],
            [-1j * gyration, diagonal, 0],
            [0, 0, axis],
        ],
        dtype=np.complex128,
    )


def example1_medium(p: Example1Params) -> MaterialPair:
    return MaterialPair(
        eps_rel=_uniaxial(p.eps1 + 1j * p.gamma_eps, p.alpha, p.eps3),
        mu_rel=_uniaxial(p.mu1 + 1j * p.gamma_mu, p.beta, p.mu3),
    )


def example1_lambdas(p: Example1Params) -> tuple[complex, complex]:
    """
    lambda_pm = [(eps1 +- alpha + i gamma_eps)(mu1 +- beta + i gamma_mu)]^-1, the eigenvalues for the circular
    polarizations (1, -+i, 0).

    Returns
    -------
    (lambda_minus, lambda_plus)
    """
    lambdas = []
    for sign in (-1, 1):
        denominator = (p.eps1 + sign * p.alpha + 1j * p.gamma_eps) * (p.mu1 + sign * p.beta + 1j * p.gamma_mu)
        if denominator == 0:
            raise DegenerateDenominator(denominator)
        lambdas.append(1 / denominator)
    return lambdas[0], lambdas[1]


def example1_initial_state(amp: complex, phi: float, k3: float, c: float = 1.0) -> FieldState:
    """
    A linearly polarized wave E0 = amp (cos phi, sin phi, 0) with B0 = 0.
    """
    return FieldState(E=amp * np.array([np.cos(phi), np.sin(phi), 0]), B=np.zeros(3), t=0.0, k=WaveVector(0, 0, k3, c))


def example1_reference_fields(
    p: Example1Params, amp: complex, phi: float, k3: float, t: float, c: float = 1.0
) -> tuple[np.ndarray, np.ndarray]:
    """
    The profiles n_E(t) and n_B(t) of the wave launched by example1_initial_state, scaled by amp. With a unit
    amplitude each component of n_E is a mean of two oscillating terms.

    Returns
    -------
    (n_E, n_B)
    """
    tau = c * abs(k3) * t
    lambda_minus, lambda_plus = example1_lambdas(p)
    root_minus = principal_sqrt(lambda_minus).sqrt_lambda
    root_plus = principal_sqrt(lambda_plus).sqrt_lambda
    phase = np.exp(1j * phi)

    cos_minus = np.cos(root_minus * tau) / phase
    cos_plus = np.cos(root_plus * tau) * phase
    sin_minus = np.sin(root_minus * tau) / root_minus / phase
    sin_plus = np.sin(root_plus * tau) / root_plus * phase

    n_E = np.array([cos_minus + cos_plus, 1j * (cos_minus - cos_plus), 0]) / 2
    n_B = np.array([1j * (sin_minus - sin_plus), -(sin_minus + sin_plus), 0]) / 2
    return amp * n_E, amp * n_B


def example1_reference_amplitudes(
    p: Example1Params, amp: complex, phi: float, k3: float, t: float, c: float = 1.0
) -> tuple[np.ndarray, np.ndarray]:
    """
    Field amplitudes E = amp n_E and B = -i sgn(k3) amp n_B / c (with the curl convention of build_curl).

    Returns
    -------
    (E, B)
    """
    n_E, n_B = example1_reference_fields(p, amp, phi, k3, t, c)
    return n_E, -1j * np.sign(k3) * n_B / c
