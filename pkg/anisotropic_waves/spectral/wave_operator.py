from dataclasses import dataclass
import logging

import numpy as np

from ..core import MaterialPair, WaveVector, build_unit_curl
from ..misc import as_matrix3

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WaveOperator:
    """
    The dimensionless wave operator Omega^2 = eps^-1 D mu^-1 D / |k|^2 for one wavevector. Its null space always
    contains k, and k^dagger eps is a left null covector.
    """

    matrix: np.ndarray
    k: WaveVector
    materials: MaterialPair

    def __post_init__(self):
        object.__setattr__(self, "matrix", as_matrix3(self.matrix))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.matrix, "fro"))

    @property
    def left_null_covector(self) -> np.ndarray:
        return self.k.direction @ self.materials.eps_rel

    def null_residuals(self) -> tuple[float, float]:
        """
        Relative residuals of the right null vector k and of the left null covector k^dagger eps.

        Returns
        -------
        (||Omega^2 k|| / (||Omega^2|| |k|), ||k^dagger eps Omega^2|| / (||Omega^2|| ||k^dagger eps||))
        """
        norm = self.norm
        if norm == 0:
            return 0.0, 0.0
        right = np.linalg.norm(self.matrix @ self.k.direction) / norm
        covector = self.left_null_covector
        left = np.linalg.norm(covector @ self.matrix) / (norm * np.linalg.norm(covector))
        return float(right), float(left)


def build_wave_operator(materials: MaterialPair, k: WaveVector) -> WaveOperator:
    """
    Assemble Omega^2 = eps^-1 D mu^-1 D with the dimensionless curl D = D(k) / |k|.
    """
    curl = build_unit_curl(k)
    matrix = materials.eps_inv @ curl @ materials.mu_inv @ curl
    _logger.debug(f"Built wave operator for k = {k.vector} with ||Omega^2||_F = {np.linalg.norm(matrix):.6g}")
    return WaveOperator(matrix=matrix, k=k, materials=materials)
