"""Relational constraints ``(R, S)`` and their satisfaction by functions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classes import CloneSpec
from .core import FiniteFunction, FunctionClass, Relation, relation_key
from .errors import DomainMismatch, ShapeError
from .invariants import _image_codes, is_invariant

__all__ = [
    "Constraint",
    "ConstraintSet",
    "make_equality",
    "make_empty",
    "make_trivial",
    "satisfies",
    "class_satisfies",
    "is_relaxation",
    "intersect_consequents",
    "is_invariant_constraint",
    "is_cc_relaxation",
]


@dataclass(frozen=True)
class Constraint:
    """An A-to-B constraint: antecedent on A, consequent on B, same arity."""

    antecedent: Relation
    consequent: Relation

    def __post_init__(self):
        if self.antecedent.arity != self.consequent.arity:
            raise ShapeError(
                f"antecedent arity {self.antecedent.arity} != consequent arity {self.consequent.arity}"
            )

    @property
    def arity(self):
        return self.antecedent.arity

    @property
    def a_size(self):
        return self.antecedent.dom

    @property
    def b_size(self):
        return self.consequent.dom

    def sort_key(self):
        return (self.arity, relation_key(self.antecedent), relation_key(self.consequent))

    def __str__(self):
        return f"({self.antecedent}, {self.consequent})"


@dataclass(frozen=True)
class ConstraintSet:
    a_size: int
    b_size: int
    members: frozenset = frozenset()

    def __post_init__(self):
        members = frozenset(self.members)
        for c in members:
            if (c.a_size, c.b_size) != (self.a_size, self.b_size):
                raise DomainMismatch(f"constraint {c} is not over ({self.a_size}, {self.b_size})")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, constraints, a_size=None, b_size=None):
        constraints = list(constraints)
        if a_size is None:
            a_size, b_size = constraints[0].a_size, constraints[0].b_size
        return cls(a_size, b_size, frozenset(constraints))

    def ordered(self):
        return sorted(self.members, key=Constraint.sort_key)

    def __iter__(self):
        return iter(self.ordered())

    def __len__(self):
        return len(self.members)

    def __contains__(self, c):
        return c in self.members

    def __le__(self, other):
        return self.members <= other.members


def make_equality(a: int, b: int) -> Constraint:
    return Constraint(Relation.equality(a), Relation.equality(b))


def make_empty(a: int, b: int, m: int) -> Constraint:
    return Constraint(Relation.empty(m, a), Relation.empty(m, b))


def make_trivial(a: int, b: int, m: int) -> Constraint:
    return Constraint(Relation.full(m, a), Relation.full(m, b))


def _check_fits(f: FiniteFunction, c: Constraint):
    if f.dom != c.a_size or f.cod != c.b_size:
        raise ShapeError(
            f"{f!r} maps a {f.dom}-set to a {f.cod}-set; constraint is {c.a_size}-to-{c.b_size}"
        )


def satisfies(f: FiniteFunction, c: Constraint) -> bool:
    """Whether ``fR ⊆ S``; every choice of antecedent rows, repetitions allowed."""
    _check_fits(f, c)
    got = _image_codes(FunctionClass(f.dom, f.cod, frozenset([f])), c.antecedent)
    return bool(np.isin(got, c.consequent.codes()).all())


def class_satisfies(K: FunctionClass, c: Constraint) -> bool:
    if not K.members:
        return True
    if K.dom != c.a_size or K.cod != c.b_size:
        raise ShapeError(f"class is {K.dom}-to-{K.cod}; constraint is {c.a_size}-to-{c.b_size}")
    return bool(np.isin(_image_codes(K, c.antecedent), c.consequent.codes()).all())


def is_relaxation(c: Constraint, c0: Constraint) -> bool:
    """``c`` shrinks the antecedent and grows the consequent of ``c0``."""
    if (c.a_size, c.b_size) != (c0.a_size, c0.b_size):
        raise DomainMismatch("constraints over different domains")
    if c.arity != c0.arity:
        return False
    return c.antecedent.tuples <= c0.antecedent.tuples and c.consequent.tuples >= c0.consequent.tuples


def intersect_consequents(family) -> Constraint:
    family = list(family)
    if not family:
        raise ValueError("intersecting consequents needs a nonempty family")
    R = family[0].antecedent
    S = family[0].consequent
    for c in family[1:]:
        if c.antecedent != R:
            raise ShapeError("all constraints must share the same antecedent")
        S = S & c.consequent
    return Constraint(R, S)


def is_invariant_constraint(c: Constraint, c1: CloneSpec, c2: CloneSpec) -> bool:
    return is_invariant(c1, c.antecedent) and is_invariant(c2, c.consequent)


def is_cc_relaxation(c: Constraint, c0: Constraint, c1: CloneSpec, c2: CloneSpec) -> bool:
    return is_relaxation(c, c0) and is_invariant_constraint(c, c1, c2)
