"""Exact tools for F_{q^2}-maximal curves: finite fields, point counts, semigroups and genus bounds."""

from .bounds import (
    BoundReport,
    TrichotomyVerdict,
    castelnuovo_c0,
    castelnuovo_upper,
    conjecture_excludes,
    conjecture_gap,
    deg_frobenius,
    deg_ramification,
    ft1_bound,
    halphen_c1,
    ihara_bound,
    known_examples,
    known_spectrum,
    third_bound,
    trichotomy_classify,
)
from .counting import BudgetExceeded, PointCount, count_curve, is_maximal, predicted_extension_count
from .curves import CurveFamily, family_genus, family_instances, parse_family
from .field_core import FieldCtx, FieldElement, make_field
from .semigroups import NumericalSemigroup, semigroup_from_generators, semigroup_genus

__version__ = "0.1.0"
