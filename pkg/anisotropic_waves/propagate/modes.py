from dataclasses import dataclass
from enum import Enum

import numpy as np

from .evolution import FieldState
from ..core import WaveVector, build_curl
from ..spectral import SpectralDecomposition, principal_sqrt
from ..misc import as_vector3


class Sense(Enum):
    RIGHT_GOING = "right-going"
    LEFT_GOING = "left-going"

    @property
    def sign(self) -> int:
        return 1 if self == Sense.RIGHT_GOING else -1


@dataclass(frozen=True)
class PlaneWaveMode:
    """
    A time-harmonic solution E(t) = polarization * exp(-i sign sqrt(lambda) omega0 t), where sign is +1 for a
    right-going and -1 for a left-going wave.
    """

    polarization: np.ndarray
    lambda_: complex
    sqrt_lambda: complex
    sense: Sense
    growth_rate: float
    k: WaveVector

    def __post_init__(self):
        object.__setattr__(self, "polarization", as_vector3(self.polarization))

    @property
    def frequency(self) -> complex:
        return self.sense.sign * self.sqrt_lambda * self.k.omega0

    def electric_field(self, t: float) -> np.ndarray:
        return self.polarization * np.exp(-1j * self.frequency * t)


def time_harmonic_modes(decomp: SpectralDecomposition, k: WaveVector) -> list[PlaneWaveMode]:
    """
    Every eigenvector of the wave operator launched in both directions: four modes when the operator is
    diagonalizable, two when its nonzero block is defective.
    """
    modes = []
    for lambda_, polarization in decomp.eigenpairs():
        root = principal_sqrt(lambda_)
        for sense in Sense:
            modes.append(
                PlaneWaveMode(
                    polarization=polarization,
                    lambda_=root.lambda_,
                    sqrt_lambda=root.sqrt_lambda,
                    sense=sense,
                    growth_rate=sense.sign * root.sqrt_lambda.imag * k.omega0,
                    k=k,
                )
            )
    return modes


def mode_initial_state(mode: PlaneWaveMode) -> FieldState:
    """
    The initial fields (E0, B0) that launch exactly one mode, with B0 = D E0 / (i frequency) from the Faraday law.
    """
    if mode.frequency == 0:
        raise ValueError("A mode of zero frequency cannot be launched")
    B = build_curl(mode.k) @ mode.polarization / (1j * mode.frequency)
    return FieldState(E=mode.polarization, B=B, t=0.0, k=mode.k)
