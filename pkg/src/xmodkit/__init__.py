"""Finite crossed modules, group-groupoids and liftings, checked exhaustively."""

__version__ = "0.1.0"

from ._kernels import backend, get_backend, set_backend
from .crossed_modules import CrossedModule, validate_xmod
from .errors import XModKitError
from .group_groupoids import GroupGroupoid
from .groupoids import Groupoid
from .groups import FiniteGroup
from .liftings import Lifting

__all__ = [
    "CrossedModule",
    "FiniteGroup",
    "GroupGroupoid",
    "Groupoid",
    "Lifting",
    "XModKitError",
    "backend",
    "get_backend",
    "set_backend",
    "validate_xmod",
]
