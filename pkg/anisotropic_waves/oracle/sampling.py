import logging

import numpy as np

from ..core import MaterialPair, WaveVector
from ..hermiticity import Example1Params, Verdict
from ..spectral import build_wave_operator, jordan_decompose
from ..misc import AnisotropicWavesError, SamplingExhausted

_logger = logging.getLogger(__name__)


def _random_complex_matrix(rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(-1, 1, (3, 3)) + 1j * rng.uniform(-1, 1, (3, 3))


def random_wavevector(rng: np.random.Generator, c: float = 1.0) -> WaveVector:
    return WaveVector(*rng.normal(size=3), c=c)


def random_medium(
    rng: np.random.Generator,
    k: WaveVector | None = None,
    max_condition: float = 100.0,
    max_eigenvector_condition: float = 1e4,
    max_operator_norm: float = 10.0,
    max_attempts: int = 10000,
) -> tuple[MaterialPair, WaveVector]:
    """
    Draw tensors with entries uniform in the complex square [-1, 1]^2 until both are well conditioned and the
    wave operator is diagonalizable with a well conditioned eigenvector basis of moderate norm.

    Parameters
    ----------
    rng
        The random generator
    k
        The wavevector the operator is built with, drawn from a standard normal when None

    Returns
    -------
    (materials, k)
    """
    if k is None:
        k = random_wavevector(rng)
    for attempt in range(max_attempts):
        eps = _random_complex_matrix(rng)
        mu = _random_complex_matrix(rng)
        if np.linalg.cond(eps) > max_condition or np.linalg.cond(mu) > max_condition:
            continue
        try:
            materials = MaterialPair(eps_rel=eps, mu_rel=mu)
            op = build_wave_operator(materials, k)
            decomp = jordan_decompose(op)
        except AnisotropicWavesError:
            continue
        if op.norm > max_operator_norm or decomp.is_defective:
            continue
        if decomp.eigenvector_condition > max_eigenvector_condition:
            continue
        _logger.debug(f"Accepted a random medium after {attempt + 1} draws")
        return materials, k
    raise SamplingExhausted(max_attempts)


def random_example1_params(rng: np.random.Generator, kind: Verdict) -> Example1Params:
    """
    Draw uniaxial parameters that land in the requested class, away from the class boundaries.
    """
    eps1, mu1 = rng.uniform(0.5, 2.0, 2)
    alpha, beta = rng.choice([-1, 1], 2) * rng.uniform(0.1, 0.4, 2)
    gamma_eps, gamma_mu = rng.choice([-1, 1], 2) * rng.uniform(0.1, 1.0, 2)
    eps3, mu3 = rng.uniform(0.5, 2.0, 2)

    if kind == Verdict.QUASI_HERMITIAN:
        if rng.random() < 0.5:
            gamma_eps = gamma_mu = 0.0
        else:
            beta = mu1 * alpha / eps1
            gamma_mu = -mu1 * gamma_eps / eps1
    elif kind == Verdict.PSEUDO_HERMITIAN_ONLY:
        beta = -mu1 * alpha / eps1
        gamma_mu = -mu1 * gamma_eps / eps1
    else:
        # Unbalanced losses keep the draw away from both conditions
        while abs(eps1 * gamma_mu + mu1 * gamma_eps) < 0.1:
            gamma_mu = rng.choice([-1, 1]) * rng.uniform(0.1, 1.0)

    return Example1Params(
        eps1=eps1,
        mu1=mu1,
        alpha=alpha,
        beta=beta,
        gamma_eps=gamma_eps,
        gamma_mu=gamma_mu,
        eps3=eps3,
        mu3=mu3,
    )
