from .complex_matrix import hermitian_part, anti_hermitian_part, invert3
from .wave_vector import WaveVector, make_wavevector, build_curl, build_unit_curl
from .materials import MaterialPair

__all__ = [
    hermitian_part.__name__,
    anti_hermitian_part.__name__,
    invert3.__name__,
    WaveVector.__name__,
    make_wavevector.__name__,
    build_curl.__name__,
    build_unit_curl.__name__,
    MaterialPair.__name__,
]
