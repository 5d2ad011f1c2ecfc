"""Python surface of the real Clifford-Dirac verification library.

The compiled core lives either next to this package (installed layout) or on
PYTHONPATH as a bare module (build-tree layout).
"""

try:
    from ercd._core import *  # noqa: F401,F403
    from ercd._core import __version__  # noqa: F401
except ImportError:  # build tree: extension not packaged yet
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
