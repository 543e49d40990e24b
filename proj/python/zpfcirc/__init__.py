"""Zero-point fluctuation potentials, forces, and transmon level shifts
for linear lumped RLC circuits."""

from ._zpfcirc import *  # noqa: F401,F403
from ._zpfcirc import __doc__  # noqa: F401
