from .series import SeriesResult, series_propagator
from .runge_kutta import maxwell_system, rk4_evolve, rk4_order_factor
from .quadrature import quadrature_integral
from .sampling import random_wavevector, random_medium, random_example1_params
from .verification import OracleTolerances, OracleErrors, verify_instance

__all__ = [
    SeriesResult.__name__,
    series_propagator.__name__,
    maxwell_system.__name__,
    rk4_evolve.__name__,
    rk4_order_factor.__name__,
    quadrature_integral.__name__,
    random_wavevector.__name__,
    random_medium.__name__,
    random_example1_params.__name__,
    OracleTolerances.__name__,
    OracleErrors.__name__,
    verify_instance.__name__,
]
