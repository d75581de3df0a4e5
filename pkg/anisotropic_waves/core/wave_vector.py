from dataclasses import dataclass

import numpy as np

from ..misc import NonPositiveSpeed, ZeroWaveVector, as_matrix3


@dataclass(frozen=True)
class WaveVector:
    """
    A real wavevector k = (k1, k2, k3) together with the speed of light c of the units it is expressed in.
    """

    k1: float
    k2: float
    k3: float
    c: float = 1.0

    def __post_init__(self):
        for name in ("k1", "k2", "k3", "c"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if self.c <= 0:
            raise NonPositiveSpeed(f"The speed of light must be positive, got c = {self.c}")
        if self.k1 == 0 and self.k2 == 0 and self.k3 == 0:
            raise ZeroWaveVector("The wavevector must not be zero")

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.k1 * self.k1 + self.k2 * self.k2 + self.k3 * self.k3))

    @property
    def omega0(self) -> float:
        """
        The reference angular frequency omega0 = c |k|.
        """
        return self.c * self.norm

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.k1, self.k2, self.k3], dtype=np.float64)

    @property
    def direction(self) -> np.ndarray:
        return self.vector / self.norm

    def outer(self) -> np.ndarray:
        """
        The matrix k k^dagger (k is real).
        """
        return as_matrix3(np.outer(self.vector, self.vector))


def make_wavevector(k1: float, k2: float, k3: float, c: float = 1.0) -> WaveVector:
    return WaveVector(k1=k1, k2=k2, k3=k3, c=c)


def build_curl(k: WaveVector) -> np.ndarray:
    """
    The Fourier-basis representation of the curl, a Hermitian matrix D with D k = 0.
    """
    k1, k2, k3 = k.k1, k.k2, k.k3
    return as_matrix3(
        [
            [0, 1j * k3, -1j * k2],
            [-1j * k3, 0, 1j * k1],
            [1j * k2, -1j * k1, 0],
        ]
    )


def build_unit_curl(k: WaveVector) -> np.ndarray:
    """
    The dimensionless curl D / |k|.
    """
    return build_curl(WaveVector(*k.direction, c=k.c))
