"""
Jordan decomposition of the dimensionless wave operator.

Omega^2 always has the structural zero eigenvalue with right null vector k. The remaining spectrum lives on the
two-dimensional invariant subspace eps^-1 k_perp (the range of eps^-1 D), on which Omega^2 acts as a 2x2 block.
That block is either diagonalizable (Case 1, J = diag(0, lambda_-, lambda_+)) or a single Jordan block
(Case 2, J = [[0, 0, 0], [0, lambda, 1], [0, 0, lambda]]).
"""

from dataclasses import dataclass
from enum import Enum
import logging

import numpy as np
import scipy.linalg

from .wave_operator import WaveOperator
from ..core import invert3
from ..misc import (
    DecompositionFailure,
    SingularMatrix,
    Tolerances,
    as_matrix3,
    frobenius_norm,
    gauge_fix,
    parallelism_residual,
)

_logger = logging.getLogger(__name__)

# Circular polarizations about the z axis, used to label lambda_- and lambda_+ when they are recognizable
_CIRCULAR_MINUS = np.array([1, 1j, 0], dtype=np.complex128)
_CIRCULAR_PLUS = np.array([1, -1j, 0], dtype=np.complex128)
_CIRCULAR_RECOGNITION = 1e-6


class CaseTag(Enum):
    DIAGONALIZABLE = "diagonalizable"
    DEFECTIVE = "defective"


@dataclass(frozen=True)
class SpectralDecomposition:
    """
    Jordan data of Omega^2 = S^-1 J S. The columns of S_inv are, in order, the null vector k/|k| and the eigenvectors
    for lambda_minus and lambda_plus (Case 1), or the eigenvector and the generalized eigenvector of the Jordan block
    (Case 2, where lambda_minus == lambda_plus).
    """

    case_tag: CaseTag
    lambda_minus: complex
    lambda_plus: complex
    S: np.ndarray
    S_inv: np.ndarray
    operator: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "S", as_matrix3(self.S))
        object.__setattr__(self, "S_inv", as_matrix3(self.S_inv))
        object.__setattr__(self, "operator", as_matrix3(self.operator))

    @property
    def is_defective(self) -> bool:
        return self.case_tag == CaseTag.DEFECTIVE

    @property
    def lambda_(self) -> complex:
        """
        The eigenvalue of the Jordan block (Case 2 only).
        """
        if not self.is_defective:
            raise ValueError("A diagonalizable decomposition has two eigenvalues, use lambda_minus and lambda_plus")
        return self.lambda_minus

    @property
    def eigenvalues(self) -> tuple[complex, complex, complex]:
        return 0j, self.lambda_minus, self.lambda_plus

    @property
    def J(self) -> np.ndarray:
        jordan = np.diag([0, self.lambda_minus, self.lambda_plus]).astype(np.complex128)
        if self.is_defective:
            jordan[1, 2] = 1
        return as_matrix3(jordan)

    @property
    def null_vector(self) -> np.ndarray:
        return self.S_inv[:, 0]

    @property
    def generalized_vector(self) -> np.ndarray:
        """
        The generalized eigenvector v2 with (Omega^2 - lambda) v2 = v1 (Case 2 only).
        """
        if not self.is_defective:
            raise ValueError("Only a defective decomposition has a generalized eigenvector")
        return self.S_inv[:, 2]

    def eigenpairs(self) -> list[tuple[complex, np.ndarray]]:
        """
        The nonzero-block eigenpairs (lambda, v) with true eigenvectors only: two in Case 1, one in Case 2.
        """
        if self.is_defective:
            return [(self.lambda_minus, self.S_inv[:, 1])]
        return [(self.lambda_minus, self.S_inv[:, 1]), (self.lambda_plus, self.S_inv[:, 2])]

    def reconstruct(self) -> np.ndarray:
        return self.S_inv @ self.J @ self.S

    def reconstruction_residual(self) -> float:
        return frobenius_norm(self.reconstruct() - self.operator) / max(1.0, frobenius_norm(self.operator))

    @property
    def eigenvector_condition(self) -> float:
        return float(np.linalg.cond(self.S_inv))


def _coincide(first: complex, second: complex, block_norm: float, tol: float) -> bool:
    """
    Whether two eigenvalues of the 2x2 block are numerically equal. Besides the relative test, eigenvalues split by
    less than the roundoff floor of a defective block (of order sqrt(u) ||B||) cannot be told apart.
    """
    gap = abs(first - second)
    floor = 8 * np.sqrt(Tolerances.unit_roundoff) * block_norm
    return gap <= tol * (1 + abs(first) + abs(second)) or gap <= floor


def _label(pairs: list[tuple[complex, np.ndarray]]) -> list[tuple[complex, np.ndarray]]:
    """
    Order two eigenpairs as (minus, plus): circular polarizations (1, i, 0) / (1, -i, 0) when recognizable, otherwise
    lexicographically by (Re, Im).
    """
    for first, second in (pairs, pairs[::-1]):
        if (
            parallelism_residual(first[1], _CIRCULAR_MINUS) <= _CIRCULAR_RECOGNITION
            and parallelism_residual(second[1], _CIRCULAR_PLUS) <= _CIRCULAR_RECOGNITION
        ):
            return [first, second]
    return sorted(pairs, key=lambda pair: (pair[0].real, pair[0].imag))


def jordan_decompose(op: WaveOperator, tol: float = Tolerances.jordan) -> SpectralDecomposition:
    """
    Compute the Jordan decomposition of a wave operator with the zero mode deflated onto span{k}.

    Parameters
    ----------
    op
        The wave operator
    tol
        Coincidence and rank threshold of the deflated block. The decomposition fails if the relative reconstruction
        residual exceeds 100 * tol

    Returns
    -------
    The decomposition, with S normalized so that each column of S_inv has unit norm and a real positive
    largest-magnitude component
    """
    matrix = np.asarray(op.matrix)
    norm = op.norm

    right_residual, left_residual = op.null_residuals()
    eps_condition = float(np.linalg.cond(op.materials.eps_rel))
    if right_residual > Tolerances.null or left_residual > Tolerances.null * max(1.0, eps_condition):
        raise DecompositionFailure(
            max(right_residual, left_residual),
            f"Wave operator violates its null invariants (right {right_residual:.3e}, left {left_residual:.3e})",
        )

    null_vector = gauge_fix(op.k.direction)

    # Orthonormal basis of the invariant subspace eps^-1 k_perp
    transverse = scipy.linalg.null_space(op.k.direction[None, :])
    basis, _ = scipy.linalg.qr(op.materials.eps_inv @ transverse, mode="economic")
    block = basis.conj().T @ matrix @ basis
    block_norm = frobenius_norm(block)

    values, vectors = np.linalg.eig(block)
    values = [complex(value) for value in values]

    if _coincide(values[0], values[1], block_norm, tol):
        lambda_ = complex(np.trace(block)) / 2
        nilpotent = block - lambda_ * np.eye(2)
        singular_values = scipy.linalg.svdvals(nilpotent)
        if singular_values[0] <= tol * max(norm, np.finfo(np.float64).tiny):
            _logger.debug(f"Degenerate diagonalizable block, lambda = {lambda_}")
            case_tag = CaseTag.DIAGONALIZABLE
            first = gauge_fix(basis[:, 0])
            second = gauge_fix(basis[:, 1])
            (lambda_minus, first), (lambda_plus, second) = _label([(lambda_, first), (lambda_, second)])
        else:
            _logger.debug(f"Defective block, lambda = {lambda_}, ||B - lambda|| = {singular_values[0]:.3e}")
            case_tag = CaseTag.DEFECTIVE
            lambda_minus = lambda_plus = lambda_
            # For a nilpotent rank-one 2x2 block the range is the kernel: any nonzero column is the eigenvector
            column = np.argmax(np.linalg.norm(nilpotent, axis=0))
            first = gauge_fix(basis @ nilpotent[:, column])
            coordinates, *_ = scipy.linalg.lstsq(nilpotent, basis.conj().T @ first)
            second = basis @ coordinates
    else:
        case_tag = CaseTag.DIAGONALIZABLE
        pairs = [(values[index], gauge_fix(basis @ vectors[:, index])) for index in range(2)]
        (lambda_minus, first), (lambda_plus, second) = _label(pairs)

    S_inv = np.column_stack([null_vector, first, second])
    try:
        S = invert3(S_inv)
    except SingularMatrix as e:
        raise DecompositionFailure(
            np.inf, f"The null vector is not independent of the invariant subspace (|det S^-1| = {e.determinant:.3e})"
        ) from e

    decomposition = SpectralDecomposition(
        case_tag=case_tag,
        lambda_minus=complex(lambda_minus),
        lambda_plus=complex(lambda_plus),
        S=S,
        S_inv=S_inv,
        operator=matrix,
    )
    residual = decomposition.reconstruction_residual()
    if residual > 100 * tol:
        raise DecompositionFailure(residual)
    if residual > Tolerances.reconstruction:
        _logger.warning(f"Jordan decomposition reconstructs Omega^2 only to {residual:.3e}")
    return decomposition
