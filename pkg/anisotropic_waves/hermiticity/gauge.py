"""
Split of an inverse material tensor into the parts that reach the transverse field and the parts aligned with
k k^dagger, which the curl annihilates on both sides.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..core import WaveVector, anti_hermitian_part, hermitian_part
from ..misc import Tolerances, as_matrix3, frobenius_norm


@dataclass(frozen=True)
class GaugeParts:
    """
    M = H0 + alpha k k^dagger + A0 + i beta k k^dagger, with H0 Hermitian, A0 anti-Hermitian and both Frobenius
    orthogonal to k k^dagger.
    """

    H0: np.ndarray
    A0: np.ndarray
    alpha: float
    beta: float
    k: WaveVector

    def __post_init__(self):
        object.__setattr__(self, "H0", as_matrix3(self.H0))
        object.__setattr__(self, "A0", as_matrix3(self.A0))

    def reconstruct(self) -> np.ndarray:
        return self.H0 + self.A0 + (self.alpha + 1j * self.beta) * self.k.outer()

    @property
    def scale(self) -> float:
        return max(1.0, frobenius_norm(self.reconstruct()))


def gauge_decompose(matrix: np.ndarray, k: WaveVector) -> GaugeParts:
    """
    Project the Hermitian and anti-Hermitian parts of a matrix orthogonally onto span{k k^dagger}.

    Parameters
    ----------
    matrix
        Typically eps^-1 or mu^-1
    k
        The wavevector that defines the gauge direction

    Returns
    -------
    The four parts, with alpha = k^T H k / |k|^4 and beta = Im(k^T A k) / |k|^4
    """
    hermitian = hermitian_part(matrix)
    anti_hermitian = anti_hermitian_part(matrix)
    kk = k.outer()
    norm4 = k.norm**4
    alpha = float(np.real(k.vector @ hermitian @ k.vector)) / norm4
    beta = float(np.imag(k.vector @ anti_hermitian @ k.vector)) / norm4
    return GaugeParts(H0=hermitian - alpha * kk, A0=anti_hermitian - 1j * beta * kk, alpha=alpha, beta=beta, k=k)


def pseudo_by_gauge(
    eps_inv_parts: GaugeParts, mu_inv_parts: GaugeParts, tol: float = Tolerances.classification
) -> tuple[bool, bool]:
    """
    Predict pseudo-Hermiticity (vanishing anti-Hermitian remainders) and quasi-Hermiticity (additionally a positive
    definite H0(eps^-1) on the plane orthogonal to k).

    Returns
    -------
    (pseudo_predicted, quasi_predicted)
    """
    if eps_inv_parts.k != mu_inv_parts.k:
        raise ValueError("Both gauge splits must be computed with the same wavevector")

    pseudo = all(frobenius_norm(parts.A0) <= tol * parts.scale for parts in (eps_inv_parts, mu_inv_parts))
    if not pseudo:
        return False, False

    transverse = scipy.linalg.null_space(eps_inv_parts.k.direction[None, :])
    restricted = transverse.T @ eps_inv_parts.H0 @ transverse
    restricted = (restricted + restricted.conj().T) / 2
    quasi = bool(np.min(np.linalg.eigvalsh(restricted)) > tol * eps_inv_parts.scale)
    return True, quasi
