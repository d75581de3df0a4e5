from dataclasses import dataclass, field, replace
from enum import Enum
import logging

import numpy as np

from .example1 import example1_medium, example1_initial_state, example1_reference_amplitudes
from .example2 import Example2Params, example2_medium
from .example3 import example3_medium, example3_initial_state, example3_reference_fields
from ..core import MaterialPair, WaveVector
from ..hermiticity import Example1Params
from ..propagate import FieldState

_logger = logging.getLogger(__name__)


class Preset(Enum):
    EXAMPLE1 = "example1"
    EXAMPLE2 = "example2"
    EXAMPLE3 = "example3"
    CUSTOM = "custom"

    @property
    def along_axis(self) -> bool:
        """
        Whether the preset is only defined for propagation along the z axis.
        """
        return self in (Preset.EXAMPLE1, Preset.EXAMPLE3)


@dataclass(frozen=True)
class ScenarioConfig:
    """
    A medium, a wavevector and initial fields.

    Attributes
    ----------
    preset
        Which medium family the parameters describe
    parameters
        The scalar parameters of the preset, named as in Example1Params, Example2Params or (f, g) for example3
    k
        The wavevector. The axis presets keep only its z component
    amplitude
        The complex amplitude of the default initial field
    angle
        The polarization angle (radians) of the default linearly polarized initial field
    E0, B0
        Explicit initial fields, overriding the preset's default
    eps_rel, mu_rel
        The tensors of a custom medium
    """

    preset: Preset
    k: WaveVector
    parameters: dict = field(default_factory=dict)
    amplitude: complex = 1.0
    angle: float = 0.0
    E0: np.ndarray | None = None
    B0: np.ndarray | None = None
    eps_rel: np.ndarray | None = None
    mu_rel: np.ndarray | None = None

    def __post_init__(self):
        object.__setattr__(self, "preset", Preset(self.preset))
        if self.preset.along_axis and (self.k.k1 != 0 or self.k.k2 != 0):
            _logger.warning(
                f"{self.preset.value} propagates along the z axis, dropping k1 = {self.k.k1}, k2 = {self.k.k2}"
            )
            object.__setattr__(self, "k", replace(self.k, k1=0.0, k2=0.0))
        if self.preset == Preset.CUSTOM and (self.eps_rel is None or self.mu_rel is None):
            raise ValueError("A custom scenario needs both eps_rel and mu_rel")

    @property
    def example1_params(self) -> Example1Params:
        return Example1Params(**self.parameters)

    @property
    def example2_params(self) -> Example2Params:
        return Example2Params(**self.parameters)

    def materials(self) -> MaterialPair:
        if self.preset == Preset.EXAMPLE1:
            return example1_medium(self.example1_params)
        if self.preset == Preset.EXAMPLE2:
            return example2_medium(*self.example2_params.as_tuple())
        if self.preset == Preset.EXAMPLE3:
            return example3_medium(self.parameters["f"], self.parameters["g"])
        return MaterialPair(eps_rel=self.eps_rel, mu_rel=self.mu_rel)

    def initial_state(self) -> FieldState:
        if self.E0 is not None:
            B0 = np.zeros(3) if self.B0 is None else self.B0
            return FieldState(E=self.E0, B=B0, t=0.0, k=self.k)
        if self.preset == Preset.EXAMPLE3:
            return example3_initial_state(self.amplitude, self.k.k3, self.k.c)
        if self.preset == Preset.EXAMPLE1:
            return example1_initial_state(self.amplitude, self.angle, self.k.k3, self.k.c)
        E0 = self.amplitude * np.array([np.cos(self.angle), np.sin(self.angle), 0])
        return FieldState(E=E0, B=np.zeros(3), t=0.0, k=self.k)

    @property
    def has_reference(self) -> bool:
        return self.preset.along_axis and self.E0 is None

    def reference_fields(self, t: float) -> tuple[np.ndarray, np.ndarray]:
        """
        The closed-form fields at time t, available for the axis presets launched from their default initial state.
        """
        if not self.has_reference:
            raise ValueError(f"No closed-form reference for preset {self.preset.value} with explicit initial fields")
        if self.preset == Preset.EXAMPLE1:
            return example1_reference_amplitudes(
                self.example1_params, self.amplitude, self.angle, self.k.k3, t, self.k.c
            )
        return example3_reference_fields(
            self.amplitude, self.parameters["f"], self.parameters["g"], self.k.k3, t, self.k.c
        )
