"""Cyclotomic Yokonuma-Hecke algebras and their KLR presentations over F_p.

Everything is computed exactly with numpy int64 arrays reduced mod p.
"""
from .decomp import check_jpa, cyclotomic_decompose, diagram_check, jpa_map, level_one_vanishing
from .errors import ConfigError, YHKLRError
from .klr_model import KlrModel, roundtrip_check
from .klr_symbolic import KlrElement, Straightener, parse_expr
from .quiver import QuiverSpec, cyclic_quiver
from .report import Report
from .scalars import FieldCfg, Weight, make_field_cfg
from .yokonuma import YContext, build_context, check_presentation

__version__ = "0.1.0"

__all__ = [
    "ConfigError", "FieldCfg", "KlrElement", "KlrModel", "QuiverSpec", "Report", "Straightener",
    "Weight", "YContext", "YHKLRError", "build_context", "check_jpa", "check_presentation",
    "cyclic_quiver", "cyclotomic_decompose", "diagram_check", "jpa_map", "level_one_vanishing",
    "make_field_cfg", "parse_expr", "roundtrip_check",
]
