"""Finite locale laboratory: frames, sublocales, classification, checks."""

try:
    from ._core import *  # noqa: F401,F403  (installed layout)
    from ._core import __doc__ as _core_doc  # noqa: F401
except ImportError:  # build-tree layout: _core next to the package on sys.path
    from _core import *  # noqa: F401,F403

__version__ = "0.1.0"
