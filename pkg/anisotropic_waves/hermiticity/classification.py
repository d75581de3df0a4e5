from dataclasses import dataclass
from enum import Enum
import logging

import numpy as np

from ..spectral import SpectralDecomposition, WaveOperator
from ..misc import Tolerances, frobenius_norm

_logger = logging.getLogger(__name__)


class Verdict(Enum):
    QUASI_HERMITIAN = "quasi-hermitian"
    PSEUDO_HERMITIAN_ONLY = "pseudo-hermitian-only"
    NON_PSEUDO_HERMITIAN = "non-pseudo-hermitian"

    @property
    def label(self) -> str:
        return self.value


@dataclass(frozen=True)
class HermiticityClass:
    """
    Classification of a wave operator with the diagnostics it was decided from.

    Attributes
    ----------
    verdict
        The classification
    pseudo_residual
        ||Omega^2^dagger - eps Omega^2 eps^-1||_F / max(1, ||Omega^2||_F), the eps-metric pseudo-Hermiticity residual
    eigenvalue_reality_defect
        max |Im lambda| / max(1, |lambda|) over the nonzero-block eigenvalues
    diagonalizable
        Whether the operator is diagonalizable
    conjugation_defect
        How far the spectrum is from being closed under complex conjugation
    metric_pseudo
        Whether the eps-metric relation holds within tolerance
    spectrum_pseudo
        Whether the spectrum is closed under conjugation within tolerance
    """

    verdict: Verdict
    pseudo_residual: float
    eigenvalue_reality_defect: float
    diagonalizable: bool
    conjugation_defect: float
    metric_pseudo: bool
    spectrum_pseudo: bool


def check_pseudo_hermitian(op: WaveOperator, tol: float = Tolerances.classification) -> tuple[bool, float]:
    """
    Test the pseudo-Hermiticity relation Omega^2^dagger = eps Omega^2 eps^-1 for the specific metric eps.

    Returns
    -------
    (is_pseudo, relative residual)
    """
    matrix = op.matrix
    eps = op.materials.eps_rel
    residual = frobenius_norm(matrix.conj().T - eps @ matrix @ op.materials.eps_inv) / max(1.0, op.norm)
    return bool(residual <= tol), float(residual)


def spectrum_conjugation_defect(eigenvalues) -> float:
    """
    max_i min_j |lambda_i - conj(lambda_j)|, relative to max(1, max |lambda|).
    """
    values = np.asarray(eigenvalues, dtype=np.complex128)
    distances = np.abs(values[:, None] - values.conj()[None, :])
    return float(np.max(np.min(distances, axis=1)) / max(1.0, np.max(np.abs(values))))


def metric_is_positive_definite(op: WaveOperator, tol: float = Tolerances.classification) -> bool:
    """
    Whether eps itself is a positive-definite metric, in which case the eps-metric relation certifies
    quasi-Hermiticity directly.
    """
    eps = op.materials.eps_rel
    if frobenius_norm(eps - eps.conj().T) > tol * frobenius_norm(eps):
        return False
    return bool(np.min(np.linalg.eigvalsh(eps)) > tol * frobenius_norm(eps))


def classify(
    decomp: SpectralDecomposition, op: WaveOperator, tol: float = Tolerances.classification
) -> HermiticityClass:
    """
    Quasi-Hermitian iff diagonalizable with a real spectrum; pseudo-Hermitian (only) iff the eps-metric relation
    holds or the spectrum is closed under conjugation; neither otherwise.
    """
    metric_pseudo, pseudo_residual = check_pseudo_hermitian(op, tol)
    nonzero = [decomp.lambda_minus, decomp.lambda_plus]
    reality_defect = max(abs(value.imag) / max(1.0, abs(value)) for value in nonzero)
    conjugation_defect = spectrum_conjugation_defect(decomp.eigenvalues)
    spectrum_pseudo = bool(conjugation_defect <= tol)
    diagonalizable = not decomp.is_defective

    if diagonalizable and reality_defect <= tol:
        verdict = Verdict.QUASI_HERMITIAN
    elif metric_pseudo or spectrum_pseudo:
        verdict = Verdict.PSEUDO_HERMITIAN_ONLY
    else:
        verdict = Verdict.NON_PSEUDO_HERMITIAN
    _logger.debug(
        f"Classified as {verdict.label} (pseudo residual {pseudo_residual:.3e}, reality defect {reality_defect:.3e}, "
        f"conjugation defect {conjugation_defect:.3e})"
    )

    return HermiticityClass(
        verdict=verdict,
        pseudo_residual=pseudo_residual,
        eigenvalue_reality_defect=reality_defect,
        diagonalizable=diagonalizable,
        conjugation_defect=conjugation_defect,
        metric_pseudo=metric_pseudo,
        spectrum_pseudo=spectrum_pseudo,
    )
