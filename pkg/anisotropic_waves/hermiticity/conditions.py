"""
Closed-form (pseudo/quasi)-Hermiticity conditions of the uniaxial gyrotropic medium. With
lambda_pm = [(eps1 +- alpha + i gamma_eps)(mu1 +- beta + i gamma_mu)]^-1 both eigenvalues are real iff
gamma_eps = gamma_mu = 0, or eps1 beta - mu1 alpha = 0 and eps1 gamma_mu + mu1 gamma_eps = 0. They form a
non-real conjugate pair iff mu1 alpha != 0, eps1 beta + mu1 alpha = 0 and eps1 gamma_mu + mu1 gamma_eps = 0.
"""

from dataclasses import dataclass
from fractions import Fraction

from .classification import Verdict
from ..misc import Tolerances


@dataclass(frozen=True)
class Example1Params:
    """
    Dimensionless entries of the uniaxial permittivity and permeability tensors.
    """

    eps1: float
    mu1: float
    alpha: float = 0.0
    beta: float = 0.0
    gamma_eps: float = 0.0
    gamma_mu: float = 0.0
    eps3: float = 1.0
    mu3: float = 1.0

    def __post_init__(self):
        for name in ("eps1", "mu1", "alpha", "beta", "gamma_eps", "gamma_mu", "eps3", "mu3"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if self.eps3 == 0 or self.mu3 == 0:
            raise ValueError("eps3 and mu3 must be nonzero for the tensors to be invertible")


def _vanishes(first: Fraction, second: Fraction, tol: float) -> bool:
    """
    Whether first + second is zero relative to the size of its terms, computed exactly.
    """
    scale = max(Fraction(1), abs(first) + abs(second))
    return abs(first + second) <= Fraction(tol) * scale


def example1_conditions(p: Example1Params, tol: float = Tolerances.condition) -> Verdict:
    """
    Predict the verdict of the matrix pipeline from the closed-form conditions, using exact rational arithmetic on
    the (exactly representable) float inputs.
    """
    eps1, mu1 = Fraction(p.eps1), Fraction(p.mu1)
    alpha, beta = Fraction(p.alpha), Fraction(p.beta)
    gamma_eps, gamma_mu = Fraction(p.gamma_eps), Fraction(p.gamma_mu)

    losses_balanced = _vanishes(eps1 * gamma_mu, mu1 * gamma_eps, tol)
    lossless = abs(gamma_eps) <= Fraction(tol) and abs(gamma_mu) <= Fraction(tol)
    if lossless or (_vanishes(eps1 * beta, -mu1 * alpha, tol) and losses_balanced):
        return Verdict.QUASI_HERMITIAN
    if abs(mu1 * alpha) > Fraction(tol) and _vanishes(eps1 * beta, mu1 * alpha, tol) and losses_balanced:
        return Verdict.PSEUDO_HERMITIAN_ONLY
    return Verdict.NON_PSEUDO_HERMITIAN
