from .example1 import (
    HERMITIAN,
    QUASI,
    PSEUDO_ONLY,
    example1_medium,
    example1_lambdas,
    example1_initial_state,
    example1_reference_fields,
    example1_reference_amplitudes,
)
from .example2 import (
    Example2Params,
    example2_special_case,
    example2_medium,
    example2_lambda0,
    example2_polarizations,
)
from .example3 import (
    example3_medium,
    example3_similarity,
    example3_initial_state,
    example3_reference_fields,
)
from .scenario_config import Preset, ScenarioConfig

__all__ = [
    "HERMITIAN",
    "QUASI",
    "PSEUDO_ONLY",
    example1_medium.__name__,
    example1_lambdas.__name__,
    example1_initial_state.__name__,
    example1_reference_fields.__name__,
    example1_reference_amplitudes.__name__,
    Example2Params.__name__,
    example2_special_case.__name__,
    example2_medium.__name__,
    example2_lambda0.__name__,
    example2_polarizations.__name__,
    example3_medium.__name__,
    example3_similarity.__name__,
    example3_initial_state.__name__,
    example3_reference_fields.__name__,
    Preset.__name__,
    ScenarioConfig.__name__,
]
