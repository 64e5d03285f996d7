"""Minimal-size sorting network search and proof re-checking.

Thin Python surface over the C++ core: networks are lists of
comparator codes, 0/1 vectors are integer bit masks.
"""

try:
    from ._sortnet import *  # noqa: F401,F403  (installed package layout)
    from ._sortnet import __version__  # noqa: F401
except ImportError:  # plain CMake build tree on PYTHONPATH
    from _sortnet import *  # noqa: F401,F403
    from _sortnet import __version__  # noqa: F401
