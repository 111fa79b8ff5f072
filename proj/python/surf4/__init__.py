"""Second-order geometry of surfaces in R^4 given in Monge form."""

from ._core import *  # noqa: F401,F403
from ._core import Error, EvalError, GeometryError, ParseError, SurfaceFileError  # noqa: F401

__version__ = "0.1.0"
