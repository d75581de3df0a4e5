"""
Exact small-matrix algebra on 3x3 complex matrices. Matrices are plain read-only numpy arrays of shape (3, 3).
"""

import logging

import numpy as np

from ..misc import SingularMatrix, Tolerances, as_matrix3, frobenius_norm

_logger = logging.getLogger(__name__)


def hermitian_part(matrix: np.ndarray) -> np.ndarray:
    """
    The Hermitian part (M + M^dagger) / 2 of a matrix.
    """
    return as_matrix3((matrix + matrix.conj().T) / 2)


def anti_hermitian_part(matrix: np.ndarray) -> np.ndarray:
    """
    The anti-Hermitian part (M - M^dagger) / 2 of a matrix.
    """
    return as_matrix3((matrix - matrix.conj().T) / 2)


def determinant_threshold(matrix: np.ndarray, relative: float = Tolerances.determinant) -> float:
    """
    Scale-invariant singularity threshold relative * ||M||_F^3 used by every inversion of the package.
    """
    return relative * frobenius_norm(matrix) ** 3


def cofactors3(matrix: np.ndarray) -> tuple[np.ndarray, complex]:
    """
    Cofactor matrix and determinant of a 3x3 matrix. Rows of the cofactor matrix are cross products of the rows of M.
    """
    rows = np.asarray(matrix, dtype=np.complex128)
    cofactors = np.array([np.cross(rows[1], rows[2]), np.cross(rows[2], rows[0]), np.cross(rows[0], rows[1])])
    determinant = complex(np.dot(rows[0], cofactors[0]))
    return cofactors, determinant


def invert3(matrix: np.ndarray, relative_threshold: float = Tolerances.determinant) -> np.ndarray:
    """
    Invert a 3x3 complex matrix with the adjugate formula.

    Parameters
    ----------
    matrix
        The matrix to invert
    relative_threshold
        The relative determinant threshold, the absolute one being relative_threshold * ||M||_F^3

    Returns
    -------
    The inverse, as a read-only matrix

    Raises
    ------
    SingularMatrix
        If |det M| is below the threshold
    """
    matrix = as_matrix3(matrix)
    cofactors, determinant = cofactors3(matrix)
    threshold = determinant_threshold(matrix, relative_threshold)
    if determinant == 0 or abs(determinant) < threshold:
        _logger.debug(f"Refusing to invert matrix with |det| = {abs(determinant):.3e} (threshold {threshold:.3e})")
        raise SingularMatrix(determinant=abs(determinant), threshold=threshold)
    return as_matrix3(cofactors.T / determinant)
