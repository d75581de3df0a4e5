import numpy as np
import scipy.integrate

from ..propagate import propagator_pair
from ..spectral import SpectralDecomposition
from ..misc import as_matrix3


def quadrature_integral(
    decomp: SpectralDecomposition, omega0: float, t: float, n_panels: int = 1000
) -> tuple[np.ndarray, np.ndarray]:
    """
    Integrate C(s) and Sf(s) over s in [0, t] with the composite Simpson rule on n_panels panels.

    Returns
    -------
    (IC, ISf)
    """
    if n_panels < 2 or n_panels % 2:
        raise ValueError(f"n_panels must be even and at least 2, got {n_panels}")
    times = np.linspace(0.0, t, n_panels + 1)
    pairs = [propagator_pair(decomp, omega0, s) for s in times]
    integral_c = scipy.integrate.simpson(np.stack([pair.C for pair in pairs]), x=times, axis=0)
    integral_sf = scipy.integrate.simpson(np.stack([pair.Sf for pair in pairs]), x=times, axis=0)
    return as_matrix3(integral_c), as_matrix3(integral_sf)
