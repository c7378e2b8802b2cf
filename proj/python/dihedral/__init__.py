"""Neumann-type Bessel series over dihedral angles."""

from ._dihedral import *  # noqa: F401,F403
from ._dihedral import Route, evaluate

__all__ = [name for name in dir() if not name.startswith("_")]
