from .classification import (
    Verdict,
    HermiticityClass,
    check_pseudo_hermitian,
    classify,
    spectrum_conjugation_defect,
    metric_is_positive_definite,
)
from .conditions import Example1Params, example1_conditions
from .gauge import GaugeParts, gauge_decompose, pseudo_by_gauge

__all__ = [
    Verdict.__name__,
    HermiticityClass.__name__,
    check_pseudo_hermitian.__name__,
    classify.__name__,
    spectrum_conjugation_defect.__name__,
    metric_is_positive_definite.__name__,
    Example1Params.__name__,
    example1_conditions.__name__,
    GaugeParts.__name__,
    gauge_decompose.__name__,
    pseudo_by_gauge.__name__,
]
