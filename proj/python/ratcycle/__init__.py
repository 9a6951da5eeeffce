"""Exact rational cycles of generalized Collatz compositions."""

try:
    from ._ratcycle import *  # noqa: F401,F403
    from ._ratcycle import __doc__  # noqa: F401
except ImportError:  # in-tree builds put _ratcycle on sys.path directly
    from _ratcycle import *  # noqa: F401,F403
    from _ratcycle import __doc__  # noqa: F401
