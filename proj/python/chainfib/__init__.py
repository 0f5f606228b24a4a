"""Fibered-class arithmetic for the magic manifold and chained-link complements."""

try:
    from chainfib._chainfib import *  # noqa: F401,F403
    from chainfib._chainfib import __doc__  # noqa: F401
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _chainfib import *  # noqa: F401,F403
