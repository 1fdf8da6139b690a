"""Finite clones, invariant relations and relational constraints."""

from .classes import (
    ArityCaps,
    Budgets,
    CloneSpec,
    clone_levels,
    clone_member,
    compose,
    generate_clone_level,
    is_stable_left,
    is_stable_right,
    projections,
    stability_closure,
)
from .constraints import (
    Constraint,
    ConstraintSet,
    class_satisfies,
    intersect_consequents,
    is_cc_relaxation,
    is_invariant_constraint,
    is_relaxation,
    make_empty,
    make_equality,
    make_trivial,
    satisfies,
)
from .core import FiniteFunction, FunctionClass, Relation, apply, apply_componentwise, canonical_order
from .errors import BudgetExceeded, DomainMismatch, ShapeError, WorkspaceError
from .estimators import ClassClosure, ConstraintClosure, InvariantGenerator
from .galois import (
    ClosureReport,
    canonical_constraint,
    closure_of_class,
    closure_of_constraints,
    constraints_satisfied,
    functions_satisfying,
    minor_closure_sides,
    separating_constraint,
    verify_lemma4_equivalence,
)
from .invariants import enumerate_invariants, generate_invariant, image, is_invariant, preserves
from .minors import (
    Scheme,
    Slot,
    apply_scheme_row,
    is_conjunctive_minor,
    is_extensive,
    is_restrictive,
    tight_minor,
    tight_minor_constraint,
)
from .verify import SuiteResult, verify
from .workspace import Workspace, format_workspace, load_workspace, parse_workspace

__version__ = "0.1.0"

__all__ = [
    "apply",
    "apply_componentwise",
    "apply_scheme_row",
    "ArityCaps",
    "BudgetExceeded",
    "Budgets",
    "canonical_constraint",
    "canonical_order",
    "class_satisfies",
    "ClassClosure",
    "clone_levels",
    "clone_member",
    "CloneSpec",
    "closure_of_class",
    "closure_of_constraints",
    "ClosureReport",
    "compose",
    "Constraint",
    "ConstraintClosure",
    "constraints_satisfied",
    "ConstraintSet",
    "DomainMismatch",
    "enumerate_invariants",
    "FiniteFunction",
    "format_workspace",
    "FunctionClass",
    "functions_satisfying",
    "generate_clone_level",
    "generate_invariant",
    "image",
    "intersect_consequents",
    "InvariantGenerator",
    "is_cc_relaxation",
    "is_conjunctive_minor",
    "is_extensive",
    "is_invariant",
    "is_invariant_constraint",
    "is_relaxation",
    "is_restrictive",
    "is_stable_left",
    "is_stable_right",
    "load_workspace",
    "make_empty",
    "make_equality",
    "make_trivial",
    "minor_closure_sides",
    "parse_workspace",
    "preserves",
    "projections",
    "Relation",
    "satisfies",
    "Scheme",
    "separating_constraint",
    "ShapeError",
    "Slot",
    "stability_closure",
    "SuiteResult",
    "tight_minor",
    "tight_minor_constraint",
    "verify",
    "verify_lemma4_equivalence",
    "Workspace",
    "WorkspaceError",
]
