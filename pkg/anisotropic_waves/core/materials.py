from dataclasses import dataclass, field

import numpy as np

from .complex_matrix import invert3
from ..misc import as_matrix3


@dataclass(frozen=True)
class MaterialPair:
    """
    Relative permittivity and permeability tensors (eps / eps0, mu / mu0) of a homogeneous medium.
    The inverses are computed once at construction, which also checks that both tensors are invertible.
    """

    eps_rel: np.ndarray
    mu_rel: np.ndarray
    eps_inv: np.ndarray = field(init=False, repr=False, compare=False)
    mu_inv: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "eps_rel", as_matrix3(self.eps_rel))
        object.__setattr__(self, "mu_rel", as_matrix3(self.mu_rel))
        object.__setattr__(self, "eps_inv", invert3(self.eps_rel))
        object.__setattr__(self, "mu_inv", invert3(self.mu_rel))

    @classmethod
    def vacuum(cls) -> "MaterialPair":
        return cls(eps_rel=np.eye(3), mu_rel=np.eye(3))

    @classmethod
    def from_inverses(cls, eps_inv: np.ndarray, mu_inv: np.ndarray) -> "MaterialPair":
        return cls(eps_rel=invert3(eps_inv), mu_rel=invert3(mu_inv))
