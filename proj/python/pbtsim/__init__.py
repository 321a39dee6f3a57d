"""Port-based teleportation under local Pauli noise.

Thin wrapper around the compiled extension: exact channel forms,
entanglement bounds, a small-N protocol simulator and Monte Carlo
boundary search.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
