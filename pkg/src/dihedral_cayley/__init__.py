"""Diameter-2 Cayley graphs of (generalised) dihedral groups."""

from .group_core import GDElement, GroupSpec
from .kernels import BACKEND_NAME

__version__ = "0.1.0"

__all__ = ["BACKEND_NAME", "GDElement", "GroupSpec", "__version__"]
