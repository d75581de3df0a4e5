"""
Scalar functions of an eigenvalue lambda at dimensionless time tau = omega0 t, and their lambda-derivatives.
A function f of a Jordan block [[lambda, 1], [0, lambda]] is [[f(lambda), f'(lambda)], [0, f(lambda)]], so every
function returns the pair (f, df/dlambda). All of them are entire in lambda; near lambda = 0 the closed forms are
replaced by their Taylor series.
"""

from math import factorial

import numpy as np

from ..misc import Tolerances

_SERIES_TERMS = 4
# The derivatives and the integrated sinc cancel to first or second order in lambda tau^2
_CANCELLATION_RADIUS = 0.5
_CANCELLATION_TERMS = 16


def _series(lambda_: complex, tau: float, offset: int, terms: int = _SERIES_TERMS) -> tuple[complex, complex]:
    """
    tau^offset * sum_n (-z)^n / (2n + offset)! with z = lambda tau^2, and its lambda-derivative.
    """
    z = lambda_ * tau * tau
    value = sum((-z) ** n / factorial(2 * n + offset) for n in range(terms))
    derivative = sum(n * (-1) ** n * z ** (n - 1) / factorial(2 * n + offset) for n in range(1, terms))
    return complex(tau**offset * value), complex(tau ** (offset + 2) * derivative)


def _use_series(lambda_: complex, tau: float) -> bool:
    return abs(lambda_) * tau * tau < Tolerances.sinc


def _cancels(lambda_: complex, tau: float) -> bool:
    return abs(lambda_) * tau * tau < _CANCELLATION_RADIUS


def cos_block(lambda_: complex, tau: float) -> tuple[complex, complex]:
    """
    cos(sqrt(lambda) tau) and -tau sin(sqrt(lambda) tau) / (2 sqrt(lambda)).
    """
    lambda_ = complex(lambda_)
    if _use_series(lambda_, tau):
        return _series(lambda_, tau, 0)
    root = np.sqrt(lambda_)
    return complex(np.cos(root * tau)), complex(-tau * np.sin(root * tau) / (2 * root))


def sinc_block(lambda_: complex, tau: float) -> tuple[complex, complex]:
    """
    sin(sqrt(lambda) tau) / sqrt(lambda) (equal to tau at lambda = 0) and
    [tau cos(sqrt(lambda) tau) - sin(sqrt(lambda) tau) / sqrt(lambda)] / (2 lambda).
    """
    lambda_ = complex(lambda_)
    if _use_series(lambda_, tau):
        value = _series(lambda_, tau, 1)[0]
    else:
        root = np.sqrt(lambda_)
        value = complex(np.sin(root * tau) / root)
    if _cancels(lambda_, tau):
        return value, _series(lambda_, tau, 1, _CANCELLATION_TERMS)[1]
    return value, complex((tau * np.cos(np.sqrt(lambda_) * tau) - value) / (2 * lambda_))


def integral_cos_block(lambda_: complex, tau: float) -> tuple[complex, complex]:
    """
    The antiderivative int_0^tau cos(sqrt(lambda) s) ds, which is sinc_block.
    """
    return sinc_block(lambda_, tau)


def integral_sinc_block(lambda_: complex, tau: float) -> tuple[complex, complex]:
    """
    int_0^tau sin(sqrt(lambda) s) / sqrt(lambda) ds = (1 - cos(sqrt(lambda) tau)) / lambda (tau^2 / 2 at lambda = 0)
    and its lambda-derivative.
    """
    lambda_ = complex(lambda_)
    if _cancels(lambda_, tau):
        return _series(lambda_, tau, 2, _CANCELLATION_TERMS)
    root = np.sqrt(lambda_)
    value = (1 - np.cos(root * tau)) / lambda_
    derivative = (tau * np.sin(root * tau) / (2 * root) - value) / lambda_
    return complex(value), complex(derivative)
