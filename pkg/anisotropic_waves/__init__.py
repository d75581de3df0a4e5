from .version import __version__

from .misc import *
from .core import *
from .spectral import *
from .hermiticity import *
from .propagate import *
from .scenarios import *
from .oracle import *
from .cli import *

__all__ = (
    []
    + misc.__all__
    + core.__all__
    + spectral.__all__
    + hermiticity.__all__
    + propagate.__all__
    + scenarios.__all__
    + oracle.__all__
    + cli.__all__
)
