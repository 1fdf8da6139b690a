"""Input coercion for the estimator layer.

Estimators accept loose inputs (strings such as ``"2:0110"``, tuples,
iterables of functions) and normalise them here, the way scikit-learn
estimators run ``check_array`` before doing any work.
"""

from __future__ import annotations

from collections.abc import Iterable

from .classes import CloneSpec
from .constraints import Constraint, ConstraintSet
from .core import FiniteFunction, FunctionClass, Relation
from .errors import DomainMismatch, ShapeError


def check_function(f, dom=2, cod=None) -> FiniteFunction:
    """Accept a :class:`FiniteFunction` or an ``"<arity>:<digits>"`` string."""
    if cod is None:
        cod = dom
    if isinstance(f, FiniteFunction):
        if (f.dom, f.cod) != (dom, cod):
            raise DomainMismatch(f"expected a {dom}-to-{cod} function, got {f!r}")
        return f
    if isinstance(f, str):
        arity, _, digits = f.partition(":")
        if not arity.isdigit() or not digits:
            raise ShapeError(f"cannot read {f!r} as <arity>:<table>")
        return FiniteFunction.from_string(int(arity), digits, dom, cod)
    raise TypeError(f"cannot read {f!r} as a function")


def check_class(X, dom=None, cod=None) -> FunctionClass:
    if isinstance(X, FunctionClass):
        if dom is not None and (X.dom, X.cod) != (dom, cod if cod is not None else dom):
            raise DomainMismatch("class lives over the wrong domains")
        return X
    if isinstance(X, (str, FiniteFunction)) or not isinstance(X, Iterable):
        raise TypeError("expected an iterable of functions")
    items = list(X)
    if dom is None:
        first = next((f for f in items if isinstance(f, FiniteFunction)), None)
        dom, cod = (first.dom, first.cod) if first else (2, 2)
    if cod is None:
        cod = dom
    return FunctionClass(dom, cod, frozenset(check_function(f, dom, cod) for f in items))


def check_relation(R, arity=None, dom=2) -> Relation:
    if isinstance(R, Relation):
        if arity is not None and R.arity != arity:
            raise ShapeError(f"expected arity {arity}, got {R.arity}")
        return R
    rows = list(R)
    if arity is None:
        if not rows:
            raise ShapeError("arity is required for an empty relation")
        arity = len(rows[0])
    return Relation.of(arity, rows, dom)


def check_constraint(c, a=2, b=2) -> Constraint:
    if isinstance(c, Constraint):
        if (c.a_size, c.b_size) != (a, b):
            raise DomainMismatch(f"expected a {a}-to-{b} constraint")
        return c
    R, S = c
    R = check_relation(R, dom=a)
    return Constraint(R, check_relation(S, R.arity, b))


def check_constraint_set(T, a=2, b=2) -> ConstraintSet:
    if isinstance(T, ConstraintSet):
        return T
    return ConstraintSet(a, b, frozenset(check_constraint(c, a, b) for c in T))


def check_clone(spec, dom=2) -> CloneSpec:
    """``None`` means the projection clone."""
    if spec is None:
        return CloneSpec.projections(dom)
    if isinstance(spec, CloneSpec):
        if spec.dom != dom:
            raise DomainMismatch(f"clone lives on a {spec.dom}-set, expected {dom}")
        return spec
    return CloneSpec.of([check_function(f, dom) for f in spec], dom)
