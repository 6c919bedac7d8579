"""Exact convergence computations on finite topological spaces.

Hyperspace convergences live on the lattice of opens, function-space
convergences are obtained from them by preimage-wise lifting, and the
transfer subpackage handles real-valued maps symbolically.
"""
from .convergence import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .funcspace import *  # noqa: F401,F403
from .hyperfamily import *  # noqa: F401,F403
from .hyperspace import *  # noqa: F401,F403
from .space import *  # noqa: F401,F403

__version__ = "0.1.0"
