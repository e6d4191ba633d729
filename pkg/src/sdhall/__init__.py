"""Exact Ringel-Hall, semi-derived Hall and Drinfeld double Hall algebras over small finite fields."""

from __future__ import annotations

from .backends import A2, ConfigError, Iso, QuiverBackend, QuiverSpec, VectBackend, make_backend
from .coefficients import QSqrt, vpow
from .double import DrinfeldDouble, ExtHallAlgebra, ExtKey
from .hallcore import HallAlgebra
from .report import Report, TruncationError
from .sdh import SDHAlgebra, SDHKey, sensitivity_controls

__version__ = "0.1.0"

__all__ = [
    "A2",
    "ConfigError",
    "DrinfeldDouble",
    "ExtHallAlgebra",
    "ExtKey",
    "HallAlgebra",
    "Iso",
    "QSqrt",
    "QuiverBackend",
    "QuiverSpec",
    "Report",
    "SDHAlgebra",
    "SDHKey",
    "TruncationError",
    "VectBackend",
    "make_backend",
    "sensitivity_controls",
    "vpow",
]
