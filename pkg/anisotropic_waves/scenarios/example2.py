"""
Complex symmetric medium with equal relative permittivity and permeability, eps = mu = Lambda.
"""

from dataclasses import astuple, dataclass

import numpy as np

from ..core import MaterialPair, WaveVector
from ..misc import DegenerateDenominator, Tolerances, frobenius_norm


@dataclass(frozen=True)
class Example2Params:
    a: complex
    b: complex
    c: complex
    g: complex
    h: complex
    u: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "g", "h", "u"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @property
    def matrix(self) -> np.ndarray:
        return np.array(
            [
                [self.a, self.g, self.u],
                [self.g, self.b, self.h],
                [self.u, self.h, self.c],
            ],
            dtype=np.complex128,
        )

    def as_tuple(self) -> tuple[complex, ...]:
        return astuple(self)


def example2_special_case(c: complex, u: complex) -> Example2Params:
    """
    The family a = b = (1 + u^2) / c, g = u^2 / c, h = u, whose nonzero eigenvalue along the z axis is c^2.
    """
    c, u = complex(c), complex(u)
    return Example2Params(a=(1 + u * u) / c, b=(1 + u * u) / c, c=c, g=u * u / c, h=u, u=u)


def example2_medium(a: complex, b: complex, c: complex, g: complex, h: complex, u: complex) -> MaterialPair:
    matrix = Example2Params(a, b, c, g, h, u).matrix
    return MaterialPair(eps_rel=matrix, mu_rel=matrix)


def example2_lambda0(a: complex, b: complex, c: complex, g: complex, h: complex, u: complex, k: WaveVector) -> complex:
    """
    The single nonzero eigenvalue k^T Lambda k / (|k|^2 det Lambda) of the wave operator, doubly degenerate with two
    independent eigenvectors.
    """
    params = Example2Params(a, b, c, g, h, u)
    a, b, c, g, h, u = params.as_tuple()
    k1, k2, k3 = k.k1, k.k2, k.k3
    numerator = a * k1 * k1 + b * k2 * k2 + c * k3 * k3 + 2 * (g * k1 * k2 + h * k2 * k3 + u * k1 * k3)
    determinant = a * b * c + 2 * g * h * u - (a * h * h + b * u * u + c * g * g)
    if abs(determinant) <= Tolerances.determinant * frobenius_norm(params.matrix) ** 3:
        raise DegenerateDenominator(determinant, f"Lambda is singular: det = {determinant}")
    return complex(numerator / (k.norm**2 * determinant))


def example2_polarizations(params: Example2Params, k: WaveVector) -> tuple[np.ndarray, np.ndarray]:
    """
    Two independent eigenvectors, both orthogonal to Lambda k: (-r, 0, p) / |k| and (-q, p, 0) / |k| with
    (p, q, r) = Lambda k.
    """
    p, q, r = params.matrix @ k.vector
    first = np.array([-r, 0, p], dtype=np.complex128) / k.norm
    second = np.array([-q, p, 0], dtype=np.complex128) / k.norm
    return first, second
