import numpy as np

from .errors import (
    AnisotropicWavesError,
    ZeroWaveVector,
    NonPositiveSpeed,
    SingularMatrix,
    DecompositionFailure,
    DegenerateDenominator,
    NoConvergence,
    SamplingExhausted,
    ConfigError,
)


class classproperty(property):
    def __get__(self, cls, owner):
        return classmethod(self.fget).__get__(None, owner)()


class Tolerances:
    """
    Default thresholds shared by the whole package. All of them are relative unless stated otherwise.
    """

    determinant = 1e-12  # |det M| >= determinant * ||M||_F^3
    null = 1e-10  # null vector residuals of the wave operator
    reconstruction = 1e-9  # ||S^-1 J S - Omega^2||_F / max(1, ||Omega^2||_F)
    jordan = 1e-8  # eigenvalue coincidence and rank test of the deflated block
    classification = 1e-8
    condition = 1e-10  # closed-form condition expressions
    sinc = 1e-6  # |lambda| (omega0 t)^2 below which Taylor forms are used

    @classproperty
    def unit_roundoff(cls) -> float:
        return float(np.finfo(np.float64).eps) / 2


def as_matrix3(values) -> np.ndarray:
    """
    Copy values into a read-only 3x3 complex matrix.
    """
    matrix = np.array(values, dtype=np.complex128)
    if matrix.shape != (3, 3):
        raise ValueError(f"Expected a 3x3 matrix, got shape {matrix.shape}")
    matrix.flags.writeable = False
    return matrix


def as_vector3(values) -> np.ndarray:
    """
    Copy values into a read-only complex 3-vector.
    """
    vector = np.array(values, dtype=np.complex128).reshape(-1)
    if vector.shape != (3,):
        raise ValueError(f"Expected a 3-vector, got shape {vector.shape}")
    vector.flags.writeable = False
    return vector


def frobenius_norm(matrix: np.ndarray) -> float:
    return float(np.linalg.norm(matrix, "fro"))


def gauge_fix(vector: np.ndarray) -> np.ndarray:
    """
    Scale a vector to unit Euclidean norm with its largest-magnitude component real and positive.
    """
    vector = np.asarray(vector, dtype=np.complex128)
    norm = np.linalg.norm(vector)
    if norm == 0:
        raise ValueError("Cannot normalize the zero vector")
    pivot = vector[np.argmax(np.abs(vector))]
    return vector * (abs(pivot) / pivot) / norm


def parallelism_residual(first: np.ndarray, second: np.ndarray) -> float:
    """
    Norm of the component of a/|a| orthogonal to b; zero exactly when both vectors span the same complex line.
    """
    first = np.asarray(first, dtype=np.complex128)
    second = np.asarray(second, dtype=np.complex128)
    first = first / np.linalg.norm(first)
    second = second / np.linalg.norm(second)
    return float(np.linalg.norm(first - np.vdot(second, first) * second))


__all__ = [
    AnisotropicWavesError.__name__,
    ZeroWaveVector.__name__,
    NonPositiveSpeed.__name__,
    SingularMatrix.__name__,
    DecompositionFailure.__name__,
    DegenerateDenominator.__name__,
    NoConvergence.__name__,
    SamplingExhausted.__name__,
    ConfigError.__name__,
    Tolerances.__name__,
]
