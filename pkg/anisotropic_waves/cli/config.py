"""
JSON run configuration. Complex numbers are written as [re, im] pairs (a bare number is accepted for a real value).

{
    "medium": {"preset": "example1", "parameters": {"eps1": 2.0, "alpha": 1.0}},
    "wavevector": {"k": [0.0, 0.0, 1.0], "c": 1.0},
    "initial": {"amplitude": [1.0, 0.0], "angle": 0.0},
    "time": {"t_max": 20.0, "dt": 0.1},
    "output": {"path": null, "format": "csv"},
    "sweep": {"parameter": "gamma_eps", "range": [-1.0, 1.0, 0.25], "linked": {"gamma_mu": -0.5}},
    "seed": 0,
    "instances": 10
}

A custom medium gives "eps_rel" and "mu_rel" as 3x3 nested lists instead of parameters, and an example2 medium may
set "special_case": true with parameters c and u only.
"""

from dataclasses import asdict, dataclass, field, replace
from enum import Enum
import json
from pathlib import Path

import numpy as np

from ..core import WaveVector
from ..scenarios import Preset, ScenarioConfig, example2_special_case
from ..misc import ConfigError

_EXAMPLE1_NAMES = ("eps1", "mu1", "alpha", "beta", "gamma_eps", "gamma_mu", "eps3", "mu3")
_EXAMPLE2_NAMES = ("a", "b", "c", "g", "h", "u")
_EXAMPLE3_NAMES = ("f", "g")


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


def parse_complex(value, name: str) -> complex:
    if isinstance(value, bool):
        raise ConfigError(f"{name} must be a number or an [re, im] pair, got {value!r}")
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(
        isinstance(part, (int, float)) and not isinstance(part, bool) for part in value
    ):
        return complex(value[0], value[1])
    raise ConfigError(f"{name} must be a number or an [re, im] pair, got {value!r}")


def format_complex(value: complex) -> list[float]:
    return [value.real, value.imag]


def _parse_vector(values, name: str) -> tuple[complex, ...]:
    if not isinstance(values, (list, tuple)) or len(values) != 3:
        raise ConfigError(f"{name} must have 3 entries")
    return tuple(parse_complex(value, f"{name}[{index}]") for index, value in enumerate(values))


def _parse_matrix(rows, name: str) -> tuple[tuple[complex, ...], ...]:
    if not isinstance(rows, (list, tuple)) or len(rows) != 3:
        raise ConfigError(f"{name} must have 3 rows")
    return tuple(_parse_vector(row, f"{name}[{index}]") for index, row in enumerate(rows))


def _parse_real(value, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{name} must be a real number, got {value!r}")
    return float(value)


def _section(data: dict, name: str) -> dict:
    section = data.get(name, {})
    if not isinstance(section, dict):
        raise ConfigError(f"Section {name} must be an object")
    return section


def parameter_names(preset: Preset, special_case: bool = False) -> tuple[str, ...]:
    return {
        Preset.EXAMPLE1: _EXAMPLE1_NAMES,
        Preset.EXAMPLE2: ("c", "u") if special_case else _EXAMPLE2_NAMES,
        Preset.EXAMPLE3: _EXAMPLE3_NAMES,
        Preset.CUSTOM: (),
    }[preset]


@dataclass(frozen=True)
class MediumConfig:
    preset: Preset
    parameters: dict = field(default_factory=dict)
    special_case: bool = False
    eps_rel: tuple | None = None
    mu_rel: tuple | None = None

    @classmethod
    def from_dict(cls, data: dict) -> "MediumConfig":
        try:
            preset = Preset(data.get("preset"))
        except ValueError:
            raise ConfigError(f"Unknown preset {data.get('preset')!r}, expected one of {[p.value for p in Preset]}")

        raw = data.get("parameters", {})
        if not isinstance(raw, dict):
            raise ConfigError("medium.parameters must be an object")
        special_case = bool(data.get("special_case", False))
        allowed = parameter_names(preset, special_case)
        unknown = set(raw) - set(allowed)
        if unknown:
            raise ConfigError(f"Unknown parameters {sorted(unknown)} for preset {preset.value}")
        parameters = {name: parse_complex(value, f"medium.parameters.{name}") for name, value in raw.items()}

        eps_rel = mu_rel = None
        if preset == Preset.CUSTOM:
            if "eps_rel" not in data or "mu_rel" not in data:
                raise ConfigError("A custom medium needs eps_rel and mu_rel")
            eps_rel = _parse_matrix(data["eps_rel"], "medium.eps_rel")
            mu_rel = _parse_matrix(data["mu_rel"], "medium.mu_rel")
        return cls(preset=preset, parameters=parameters, special_case=special_case, eps_rel=eps_rel, mu_rel=mu_rel)

    def to_dict(self) -> dict:
        data = {
            "preset": self.preset.value,
            "parameters": {name: format_complex(value) for name, value in self.parameters.items()},
        }
        if self.special_case:
            data["special_case"] = True
        if self.eps_rel is not None:
            data["eps_rel"] = [[format_complex(value) for value in row] for row in self.eps_rel]
            data["mu_rel"] = [[format_complex(value) for value in row] for row in self.mu_rel]
        return data

    def with_parameter(self, name: str, value: float) -> "MediumConfig":
        """
        Replace one parameter, addressing the real or imaginary part alone with a ".re" or ".im" suffix.
        """
        base, _, part = name.partition(".")
        if part not in ("", "re", "im"):
            raise ConfigError(f"Parameter suffix must be .re or .im, got {name!r}")
        current = self.parameters.get(base, 0j)
        if part == "re":
            updated = complex(value, current.imag)
        elif part == "im":
            updated = complex(current.real, value)
        else:
            updated = complex(value)
        return replace(self, parameters={**self.parameters, base: updated})

    def preset_parameters(self) -> dict:
        """
        The parameters as the scenario constructors expect them.
        """
        required = {
            Preset.EXAMPLE1: ("eps1", "mu1"),
            Preset.EXAMPLE2: ("c", "u") if self.special_case else _EXAMPLE2_NAMES,
            Preset.EXAMPLE3: _EXAMPLE3_NAMES,
            Preset.CUSTOM: (),
        }[self.preset]
        missing = [name for name in required if name not in self.parameters]
        if missing:
            raise ConfigError(f"Preset {self.preset.value} is missing parameters {missing}")

        if self.preset == Preset.EXAMPLE1:
            parameters = {}
            for name, value in self.parameters.items():
                if value.imag != 0:
                    raise ConfigError(f"example1 parameter {name} must be real, got {value}")
                parameters[name] = value.real
            return parameters
        if self.preset == Preset.EXAMPLE2 and self.special_case:
            if set(self.parameters) != {"c", "u"}:
                raise ConfigError("The example2 special case needs exactly the parameters c and u")
            return asdict(example2_special_case(self.parameters["c"], self.parameters["u"]))
        return dict(self.parameters)


@dataclass(frozen=True)
class SweepConfig:
    parameter: str
    lo: float
    hi: float
    step: float
    linked: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.step > 0:
            raise ConfigError(f"The sweep step must be positive, got {self.step}")

    @classmethod
    def from_dict(cls, data: dict) -> "SweepConfig":
        values = data.get("range")
        if not isinstance(values, (list, tuple)) or len(values) != 3:
            raise ConfigError("sweep.range must be [lo, hi, step]")
        linked = data.get("linked", {})
        if not isinstance(linked, dict):
            raise ConfigError("sweep.linked must be an object")
        return cls(
            parameter=str(data.get("parameter", "")),
            lo=_parse_real(values[0], "sweep.range[0]"),
            hi=_parse_real(values[1], "sweep.range[1]"),
            step=_parse_real(values[2], "sweep.range[2]"),
            linked={name: _parse_real(value, f"sweep.linked.{name}") for name, value in linked.items()},
        )

    @classmethod
    def from_range(cls, parameter: str, text: str, linked: dict | None = None) -> "SweepConfig":
        """
        Parse a LO:HI:STEP range.
        """
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"Range must read LO:HI:STEP, got {text!r}")
        try:
            lo, hi, step = (float(part) for part in parts)
        except ValueError:
            raise ConfigError(f"Range must read LO:HI:STEP, got {text!r}")
        return cls(parameter=parameter, lo=lo, hi=hi, step=step, linked=linked or {})

    def to_dict(self) -> dict:
        return {"parameter": self.parameter, "range": [self.lo, self.hi, self.step], "linked": dict(self.linked)}

    def values(self) -> list[float]:
        """
        lo, lo + step, ... up to hi inclusive; empty when hi < lo.
        """
        if self.hi < self.lo:
            return []
        count = int(np.floor((self.hi - self.lo) / self.step + 1e-9)) + 1
        return [self.lo + index * self.step for index in range(count)]


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a command needs: the medium, the wavevector, the initial fields, the time grid and the output.
    """

    medium: MediumConfig
    k: tuple[float, float, float] = (0.0, 0.0, 1.0)
    c: float = 1.0
    amplitude: complex = 1 + 0j
    angle: float = 0.0
    E0: tuple | None = None
    B0: tuple | None = None
    t_max: float = 20.0
    dt: float = 0.1
    out: str | None = None
    format: OutputFormat = OutputFormat.CSV
    seed: int = 0
    instances: int = 10
    sweep: SweepConfig | None = None

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        if not isinstance(data, dict):
            raise ConfigError("The configuration must be a JSON object")
        if "medium" not in data:
            raise ConfigError("The configuration has no medium section")
        medium = MediumConfig.from_dict(_section(data, "medium"))

        wavevector = _section(data, "wavevector")
        k = wavevector.get("k", [0.0, 0.0, 1.0])
        if not isinstance(k, (list, tuple)) or len(k) != 3:
            raise ConfigError("wavevector.k must have 3 real entries")
        k = tuple(_parse_real(value, f"wavevector.k[{index}]") for index, value in enumerate(k))

        initial = _section(data, "initial")
        E0 = _parse_vector(initial["E0"], "initial.E0") if "E0" in initial else None
        B0 = _parse_vector(initial["B0"], "initial.B0") if "B0" in initial else None

        time = _section(data, "time")
        output = _section(data, "output")
        try:
            output_format = OutputFormat(output.get("format", "csv"))
        except ValueError:
            raise ConfigError(f"Unknown output format {output.get('format')!r}")

        sweep = SweepConfig.from_dict(data["sweep"]) if "sweep" in data else None
        seed = data.get("seed", 0)
        instances = data.get("instances", 10)
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise ConfigError(f"seed must be an integer, got {seed!r}")
        if isinstance(instances, bool) or not isinstance(instances, int):
            raise ConfigError(f"instances must be an integer, got {instances!r}")

        return cls(
            medium=medium,
            k=k,
            c=_parse_real(wavevector.get("c", 1.0), "wavevector.c"),
            amplitude=parse_complex(initial.get("amplitude", 1.0), "initial.amplitude"),
            angle=_parse_real(initial.get("angle", 0.0), "initial.angle"),
            E0=E0,
            B0=B0,
            t_max=_parse_real(time.get("t_max", 20.0), "time.t_max"),
            dt=_parse_real(time.get("dt", 0.1), "time.dt"),
            out=output.get("path"),
            format=output_format,
            seed=seed,
            instances=instances,
            sweep=sweep,
        )

    @classmethod
    def load(cls, path: str | Path) -> "RunConfig":
        try:
            with open(path, "r", encoding="utf-8") as file:
                data = json.load(file)
        except OSError as e:
            raise ConfigError(f"Cannot read configuration {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise ConfigError(f"Configuration {path} is not valid JSON: {e}") from e
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        initial = {"amplitude": format_complex(self.amplitude), "angle": self.angle}
        if self.E0 is not None:
            initial["E0"] = [format_complex(value) for value in self.E0]
        if self.B0 is not None:
            initial["B0"] = [format_complex(value) for value in self.B0]
        data = {
            "medium": self.medium.to_dict(),
            "wavevector": {"k": list(self.k), "c": self.c},
            "initial": initial,
            "time": {"t_max": self.t_max, "dt": self.dt},
            "output": {"path": self.out, "format": self.format.value},
            "seed": self.seed,
            "instances": self.instances,
        }
        if self.sweep is not None:
            data["sweep"] = self.sweep.to_dict()
        return data

    def times(self) -> np.ndarray:
        """
        The sampling grid 0, dt, ..., with round(t_max / dt) + 1 points.
        """
        if not self.dt > 0:
            raise ConfigError(f"dt must be positive, got {self.dt}")
        if self.t_max < 0:
            raise ConfigError(f"t_max must be non-negative, got {self.t_max}")
        return np.arange(int(round(self.t_max / self.dt)) + 1) * self.dt

    def scenario(self) -> ScenarioConfig:
        medium = self.medium
        return ScenarioConfig(
            preset=medium.preset,
            k=WaveVector(*self.k, c=self.c),
            parameters=medium.preset_parameters(),
            amplitude=self.amplitude,
            angle=self.angle,
            E0=None if self.E0 is None else np.array(self.E0),
            B0=None if self.B0 is None else np.array(self.B0),
            eps_rel=None if medium.eps_rel is None else np.array(medium.eps_rel),
            mu_rel=None if medium.mu_rel is None else np.array(medium.mu_rel),
        )
