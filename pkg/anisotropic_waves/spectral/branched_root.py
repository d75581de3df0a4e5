from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BranchedRoot:
    """
    A complex number together with its principal square root: Re(sqrt) >= 0, and Im(sqrt) >= 0 when Re(sqrt) = 0.
    """

    lambda_: complex
    sqrt_lambda: complex


def principal_sqrt(lambda_: complex) -> BranchedRoot:
    lambda_ = complex(lambda_)
    root = complex(np.sqrt(lambda_))
    # sqrt(-x - 0j) lands on the lower half of the imaginary axis
    if root.real == 0 and root.imag < 0:
        root = -root
    return BranchedRoot(lambda_=lambda_, sqrt_lambda=root)
