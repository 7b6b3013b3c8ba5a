"""Exact counts of rational plane curves with an m-fold point.

The main entry point is :func:`mfold.recursion.count`; two independent
oracles live in :mod:`mfold.kontsevich` and :mod:`mfold.chern`.
"""
from __future__ import annotations

from .classes import CurveClass, LINE, EXCEPTIONAL, pairing, line_degree, split_range
from .recursion import (
    CountQuery,
    FamilyRecursion,
    MemoStore,
    base_case,
    blowup_gw,
    boundary_B,
    count,
    dimension_gate,
)
from .kontsevich import n_plane
from .chern import CohomClass, codim_j, euler_V, fixed_singularity_count, s_class

__all__ = [
    "CurveClass",
    "LINE",
    "EXCEPTIONAL",
    "pairing",
    "line_degree",
    "split_range",
    "CountQuery",
    "FamilyRecursion",
    "MemoStore",
    "base_case",
    "blowup_gw",
    "boundary_B",
    "count",
    "dimension_gate",
    "n_plane",
    "CohomClass",
    "codim_j",
    "euler_V",
    "fixed_singularity_count",
    "s_class",
]

__version__ = "0.1.0"
