"""Exact p-block defect-group invariants from character tables."""

try:
    from ._blockscope import *  # noqa: F401,F403
    from ._blockscope import __doc__  # noqa: F401
except ImportError:  # build-tree layout: extension next to the package
    from _blockscope import *  # noqa: F401,F403

__version__ = "0.1.0"
