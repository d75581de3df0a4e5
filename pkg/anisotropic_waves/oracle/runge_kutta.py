import logging

import numpy as np

from ..core import MaterialPair, WaveVector, build_curl
from ..propagate import FieldState, evolve
from ..spectral import build_wave_operator, jordan_decompose

_logger = logging.getLogger(__name__)


def maxwell_system(m: MaterialPair, k: WaveVector) -> np.ndarray:
    """
    The 6x6 generator of d(E, B)/dt = (c^2 eps^-1 D mu^-1 B, -D E).
    """
    curl = build_curl(k)
    system = np.zeros((6, 6), dtype=np.complex128)
    system[:3, 3:] = k.c**2 * m.eps_inv @ curl @ m.mu_inv
    system[3:, :3] = -curl
    return system


def rk4_evolve(
    m: MaterialPair, k: WaveVector, E0: np.ndarray, B0: np.ndarray, t_end: float, h: float
) -> FieldState:
    """
    Integrate the Maxwell system with the classical fourth order Runge-Kutta scheme. The step is shrunk so that an
    integer number of steps lands exactly on t_end.
    """
    if not h > 0:
        raise ValueError(f"h must be positive, got {h}")
    if t_end < 0:
        raise ValueError(f"t_end must be non-negative, got {t_end}")

    state = np.concatenate([np.asarray(E0, dtype=np.complex128), np.asarray(B0, dtype=np.complex128)])
    n_steps = int(np.ceil(t_end / h))
    if n_steps == 0:
        return FieldState(E=state[:3], B=state[3:], t=0.0, k=k)
    h = t_end / n_steps

    system = maxwell_system(m, k)

    def rate(y: np.ndarray) -> np.ndarray:
        return system @ y

    for _ in range(n_steps):
        k1 = rate(state)
        k2 = rate(state + h / 2 * k1)
        k3 = rate(state + h / 2 * k2)
        k4 = rate(state + h * k3)
        state = state + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    _logger.debug(f"RK4 took {n_steps} steps of {h:.3e} to reach t = {t_end}")
    return FieldState(E=state[:3], B=state[3:], t=t_end, k=k)


def rk4_order_factor(
    m: MaterialPair, k: WaveVector, E0: np.ndarray, B0: np.ndarray, t_end: float, h: float
) -> float:
    """
    The ratio of the RK4 errors with steps h and h / 2, measured against the closed-form evolution. It approaches
    2^4 = 16 in the asymptotic regime.
    """
    decomp = jordan_decompose(build_wave_operator(m, k))
    reference = evolve(FieldState(E=E0, B=B0, t=0.0, k=k), decomp, m, t_end)

    def error(step: float) -> float:
        state = rk4_evolve(m, k, E0, B0, t_end, step)
        return float(np.linalg.norm(np.concatenate([state.E - reference.E, state.B - reference.B])))

    return error(h) / error(h / 2)
