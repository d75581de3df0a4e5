"""
Medium whose wave operator is not diagonalizable: along the z axis its transverse block is the Jordan-type matrix
[[f - i g, g], [g, f + i g]] with the single eigenvalue f.
"""

import numpy as np

from ..core import MaterialPair, WaveVector
from ..misc import SingularMatrix, Tolerances
from ..propagate import FieldState
from ..spectral import principal_sqrt


def _block(f: complex, g: complex) -> np.ndarray:
    return np.array([[f - 1j * g, g], [g, f + 1j * g]], dtype=np.complex128)


def example3_medium(f: complex, g: complex, as_printed: bool = False) -> MaterialPair:
    """
    The permittivity eps = B(f, g)^-1 (+) 1 with B(f, g) = [[f - i g, g], [g, f + i g]], so that the transverse block
    of the wave operator is B(f, g) itself. With as_printed, eps = B(f, g) (+) 1 instead, whose operator is the same
    family with parameters (1 / f, -g / f^2).
    """
    f, g = complex(f), complex(g)
    if f == 0:
        # det B(f, g) = f^2
        raise SingularMatrix(0.0, Tolerances.determinant, "The permittivity block is singular for f = 0")
    if g == 0:
        raise ValueError("g must be nonzero, otherwise the operator is diagonalizable")
    eps = np.eye(3, dtype=np.complex128)
    # B(f, g)^-1 = B(1 / f, -g / f^2)
    eps[:2, :2] = _block(f, g) if as_printed else _block(1 / f, -g / (f * f))
    return MaterialPair(eps_rel=eps, mu_rel=np.eye(3))


def example3_similarity(f: complex, g: complex) -> tuple[np.ndarray, np.ndarray]:
    """
    A Jordan basis of the operator along the z axis: the columns of S^-1 are k/|k|, the eigenvector (-i, 1, 0) and
    the generalized eigenvector (1 / g, 0, 0).

    Returns
    -------
    (S, S_inv)
    """
    g = complex(g)
    S = np.array([[0, 0, 1], [0, 1, 0], [g, 1j * g, 0]], dtype=np.complex128)
    S_inv = np.array([[0, -1j, 1 / g], [0, 1, 0], [1, 0, 0]], dtype=np.complex128)
    return S, S_inv


def example3_initial_state(amp: complex, k3: float, c: float = 1.0) -> FieldState:
    return FieldState(E=amp * np.array([1, -1j, 0]), B=np.zeros(3), t=0.0, k=WaveVector(0, 0, k3, c))


def example3_reference_fields(
    amp: complex, f: complex, g: complex, k3: float, t: float, c: float = 1.0
) -> tuple[np.ndarray, np.ndarray]:
    """
    The secularly growing fields launched by example3_initial_state.

    Returns
    -------
    (E, B)
    """
    f, g = complex(f), complex(g)
    tau = c * abs(k3) * t
    root = principal_sqrt(f).sqrt_lambda
    cosine = np.cos(root * tau)
    sine = np.sin(root * tau)

    E = amp * (cosine * np.array([1, -1j, 0]) + g * tau * sine / root * np.array([1j, -1, 0]))
    secular = g / root * (sine / f - tau * cosine / root)
    B = -np.sign(k3) / c * amp * (sine / root * np.array([1, -1j, 0]) + secular * np.array([-1j, 1, 0]))
    return E, B
