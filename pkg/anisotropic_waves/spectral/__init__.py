from .wave_operator import WaveOperator, build_wave_operator
from .decomposition import CaseTag, SpectralDecomposition, jordan_decompose
from .branched_root import BranchedRoot, principal_sqrt

__all__ = [
    WaveOperator.__name__,
    build_wave_operator.__name__,
    CaseTag.__name__,
    SpectralDecomposition.__name__,
    jordan_decompose.__name__,
    BranchedRoot.__name__,
    principal_sqrt.__name__,
]
