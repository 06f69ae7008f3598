"""nilgrade: exact-arithmetic negative gradings and cohomology of nilpotent Lie algebras.

Core objects: structure-constant Lie algebras over Q, their exterior-algebra
cochain complex with exact Betti numbers, basis-diagonal weight assignments,
the admissibility conditions (W)/(H), an exhaustive bounded grading search,
and a catalog of low-dimensional algebras with reference verdict tables.
"""

from .algebra import (
    BracketEntry,
    LieAlgebra,
    SeriesReport,
    Subspace,
    ValidationReport,
    bracket,
    change_basis,
    direct_sum_abelian,
    lower_central_series,
    p_filiform_degree,
    validate,
)
from .cochain import betti, betti_vector, ce_differential, k_form_basis
from .errors import (
    InputError,
    InternalCheckError,
    NilgradeError,
    NotHomogeneousError,
    NotNilpotentError,
    UnknownAlgebraError,
)
from .grading import (
    ConditionReport,
    GradedBettiProfile,
    check_conditions,
    component_dims,
    double_weights,
    graded_betti,
    is_homogeneous,
    structural_lemma_checks,
)
from .linalg import RationalMatrix, kernel_basis, rank
from .search import (
    GuardAlarm,
    SearchOutcome,
    WeightConstraintSystem,
    constraint_system,
    enumerate_gradings,
    find_grading,
    theorem_guard,
)

__version__ = "0.1.0"

__all__ = [
    "BracketEntry",
    "ConditionReport",
    "GradedBettiProfile",
    "GuardAlarm",
    "InputError",
    "InternalCheckError",
    "LieAlgebra",
    "NilgradeError",
    "NotHomogeneousError",
    "NotNilpotentError",
    "RationalMatrix",
    "SearchOutcome",
    "SeriesReport",
    "Subspace",
    "UnknownAlgebraError",
    "ValidationReport",
    "WeightConstraintSystem",
    "betti",
    "betti_vector",
    "bracket",
    "ce_differential",
    "change_basis",
    "check_conditions",
    "component_dims",
    "constraint_system",
    "direct_sum_abelian",
    "double_weights",
    "enumerate_gradings",
    "find_grading",
    "graded_betti",
    "is_homogeneous",
    "k_form_basis",
    "kernel_basis",
    "lower_central_series",
    "p_filiform_degree",
    "rank",
    "structural_lemma_checks",
    "theorem_guard",
    "validate",
]
