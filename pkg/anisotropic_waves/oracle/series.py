from dataclasses import dataclass
import logging

import numpy as np

from ..spectral import WaveOperator
from ..misc import NoConvergence, as_matrix3, frobenius_norm

_logger = logging.getLogger(__name__)

# Past this the partial sums lose every significant digit to cancellation
_MAX_SERIES_ARGUMENT = 30.0


@dataclass(frozen=True)
class SeriesResult:
    C: np.ndarray
    Sf: np.ndarray
    terms_used: int
    last_term_norm: float

    def __post_init__(self):
        object.__setattr__(self, "C", as_matrix3(self.C))
        object.__setattr__(self, "Sf", as_matrix3(self.Sf))


def series_propagator(op: WaveOperator, omega0_t: float, tol: float = 1e-12, max_terms: int = 100) -> SeriesResult:
    """
    Sum the defining power series C = sum_n (-X)^n / (2n)! and Sf = tau sum_n (-X)^n / (2n + 1)! with
    X = tau^2 Omega^2 and tau = omega0 t.

    Parameters
    ----------
    op
        The wave operator
    omega0_t
        The dimensionless time tau
    tol
        The summation stops at the first term whose Frobenius norm does not exceed tol (that term is not added)
    max_terms
        The number of terms after which the summation gives up

    Returns
    -------
    The partial sums, the number of terms added and the norm of the first neglected term
    """
    if max_terms < 10:
        raise ValueError(f"max_terms must be at least 10, got {max_terms}")
    tau = float(omega0_t)
    argument = abs(tau) * np.sqrt(op.norm)
    if argument > _MAX_SERIES_ARGUMENT:
        raise ValueError(f"|omega0 t| sqrt(||Omega^2||) = {argument:.3g} is too large for the series")

    step = -(tau * tau) * np.asarray(op.matrix)
    term_c = np.eye(3, dtype=np.complex128)
    term_sf = tau * np.eye(3, dtype=np.complex128)
    C, Sf = term_c.copy(), term_sf.copy()
    terms_used = 1
    while True:
        n = terms_used
        term_c = term_c @ step / ((2 * n - 1) * (2 * n))
        term_sf = term_sf @ step / ((2 * n) * (2 * n + 1))
        last_term_norm = max(frobenius_norm(term_c), frobenius_norm(term_sf))
        if last_term_norm <= tol:
            break
        if terms_used >= max_terms:
            raise NoConvergence(terms_used, last_term_norm)
        C += term_c
        Sf += term_sf
        terms_used += 1

    _logger.debug(f"Series converged after {terms_used} terms at tau = {tau}")
    return SeriesResult(C=C, Sf=Sf, terms_used=terms_used, last_term_norm=last_term_norm)
