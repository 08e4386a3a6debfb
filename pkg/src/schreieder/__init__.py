"""Exact computations on Schreieder's surfaces ``X_c`` as elliptic modular surfaces.

Submodules: :mod:`singularities`, :mod:`fibers`, :mod:`invariants`,
:mod:`tower`, :mod:`jmap`, :mod:`monodromy`, :mod:`congruence`,
:mod:`mordell_weil`, :mod:`verify` and :mod:`cli`.
"""
from .errors import (
    DomainError,
    InconsistentConfiguration,
    NonUnimodular,
    SchreiederError,
    TableUnavailable,
    UnsupportedFiber,
)
from .invariants import SurfaceConfig, invariant_report, schreieder_config
from .singularities import QuotientSingularity, resolve, schreieder_genus

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "InconsistentConfiguration",
    "NonUnimodular",
    "SchreiederError",
    "TableUnavailable",
    "UnsupportedFiber",
    "SurfaceConfig",
    "invariant_report",
    "schreieder_config",
    "QuotientSingularity",
    "resolve",
    "schreieder_genus",
]
