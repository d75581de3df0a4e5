from .block_functions import cos_block, sinc_block, integral_cos_block, integral_sinc_block
from .propagator import PropagatorPair, matrix_function, propagator_pair, integral_pair
from .evolution import FieldState, electric_rate, evolve, evolve_many
from .modes import Sense, PlaneWaveMode, time_harmonic_modes, mode_initial_state

__all__ = [
    cos_block.__name__,
    sinc_block.__name__,
    integral_cos_block.__name__,
    integral_sinc_block.__name__,
    PropagatorPair.__name__,
    matrix_function.__name__,
    propagator_pair.__name__,
    integral_pair.__name__,
    FieldState.__name__,
    electric_rate.__name__,
    evolve.__name__,
    evolve_many.__name__,
    Sense.__name__,
    PlaneWaveMode.__name__,
    time_harmonic_modes.__name__,
    mode_initial_state.__name__,
]
