class AnisotropicWavesError(Exception):
    """
    Base class of every error raised by the package, so that callers (the CLI in particular) can tell them apart
    from built-in errors.
    """


class ZeroWaveVector(AnisotropicWavesError, ValueError):
    """Raised when a wavevector of zero length is requested."""


class NonPositiveSpeed(AnisotropicWavesError, ValueError):
    """Raised when the speed of light is not strictly positive."""


class SingularMatrix(AnisotropicWavesError, ArithmeticError):
    """
    Raised when a matrix that must be inverted has a determinant below the relative singularity threshold.

    Attributes
    ----------
    determinant: float
        The absolute value of the determinant that was found
    threshold: float
        The threshold it was compared to
    """

    def __init__(self, determinant: float, threshold: float, message: str | None = None):
        if message is None:
            message = f"Matrix is singular: |det| = {determinant:.3e} < {threshold:.3e}"
        super().__init__(message)
        self.determinant = determinant
        self.threshold = threshold


class DecompositionFailure(AnisotropicWavesError, ArithmeticError):
    """Raised when the Jordan decomposition does not reconstruct the operator to the requested tolerance."""

    def __init__(self, residual: float, message: str | None = None):
        if message is None:
            message = f"Jordan decomposition failed: relative reconstruction residual {residual:.3e}"
        super().__init__(message)
        self.residual = residual


class DegenerateDenominator(AnisotropicWavesError, ArithmeticError):
    """Raised when a closed-form expression would divide by a vanishing denominator."""

    def __init__(self, denominator: complex, message: str | None = None):
        if message is None:
            message = f"Degenerate denominator: {denominator}"
        super().__init__(message)
        self.denominator = denominator


class NoConvergence(AnisotropicWavesError, ArithmeticError):
    """Raised when a truncated series exhausts its term budget before reaching the requested tolerance."""

    def __init__(self, terms_used: int, last_term_norm: float):
        super().__init__(f"Series did not converge after {terms_used} terms (last term norm {last_term_norm:.3e})")
        self.terms_used = terms_used
        self.last_term_norm = last_term_norm


class ConfigError(AnisotropicWavesError, ValueError):
    """Raised when a run configuration cannot be parsed or validated."""


class SamplingExhausted(AnisotropicWavesError, RuntimeError):
    """Raised when a rejection sampler draws its whole attempt budget without accepting a sample."""

    def __init__(self, attempts: int):
        super().__init__(f"No acceptable sample in {attempts} draws")
        self.attempts = attempts
