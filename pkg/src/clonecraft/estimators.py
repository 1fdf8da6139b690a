"""scikit-learn style front ends for the closure operators.

``fit`` learns a closed set from data (a class of functions or a set of
constraints); ``predict`` answers membership for new items; ``transform``
maps items to derived objects.  Hyperparameters are plain constructor
arguments, so ``get_params``/``set_params``/``clone`` work as usual.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .classes import ArityCaps, Budgets
from .galois import closure_of_class, closure_of_constraints, functions_satisfying, separating_constraint
from .invariants import generate_invariant
from .validation import (
    check_class,
    check_clone,
    check_constraint,
    check_constraint_set,
    check_function,
    check_relation,
)

__all__ = ["ClassClosure", "ConstraintClosure", "InvariantGenerator"]


class _CapsMixin:
    def _caps(self):
        return ArityCaps(self.fn_arity_cap, self.rel_arity_cap)

    def _budgets(self):
        return Budgets(self.max_subsets, self.max_skolem)


class ClassClosure(_CapsMixin, BaseEstimator):
    """Closure of a function class under the (C1, C2)-constraint Galois connection.

    Parameters
    ----------
    c1, c2 : CloneSpec, iterable of functions, or None
        Clones on the domain and codomain; ``None`` is the projection clone.
    dom, cod : int
        Domain and codomain sizes.
    fn_arity_cap, rel_arity_cap : int
        Truncation of function and relation arities.

    Attributes
    ----------
    closure_ : FunctionClass
    exact_ : bool
        Whether the relation cap reaches ``dom ** fn_arity_cap``.
    """

    def __init__(
        self,
        c1=None,
        c2=None,
        dom=2,
        cod=2,
        fn_arity_cap=2,
        rel_arity_cap=4,
        max_subsets=2**16,
        max_skolem=3**6,
    ):
        self.c1 = c1
        self.c2 = c2
        self.dom = dom
        self.cod = cod
        self.fn_arity_cap = fn_arity_cap
        self.rel_arity_cap = rel_arity_cap
        self.max_subsets = max_subsets
        self.max_skolem = max_skolem

    def fit(self, X, y=None):
        K = check_class(X, self.dom, self.cod)
        self.c1_ = check_clone(self.c1, self.dom)
        self.c2_ = check_clone(self.c2, self.cod)
        report = closure_of_class(K, self.c1_, self.c2_, self._caps(), self._budgets())
        self.class_ = K
        self.closure_ = report.closed
        self.exact_ = report.exact_within_caps
        return self

    def predict(self, X):
        check_is_fitted(self, "closure_")
        return np.array([check_function(f, self.dom, self.cod) in self.closure_ for f in X])

    def transform(self, X):
        """Separating constraint for each function, ``None`` for members of the closure."""
        check_is_fitted(self, "closure_")
        return [
            separating_constraint(
                self.closure_, check_function(f, self.dom, self.cod), self.c1_, self.c2_, self._caps()
            )
            for f in X
        ]


class ConstraintClosure(_CapsMixin, BaseEstimator):
    """Closure of a set of (C1, C2)-constraints; the dual of :class:`ClassClosure`."""

    def __init__(
        self,
        c1=None,
        c2=None,
        dom=2,
        cod=2,
        fn_arity_cap=2,
        rel_arity_cap=2,
        max_subsets=2**16,
        max_skolem=3**6,
    ):
        self.c1 = c1
        self.c2 = c2
        self.dom = dom
        self.cod = cod
        self.fn_arity_cap = fn_arity_cap
        self.rel_arity_cap = rel_arity_cap
        self.max_subsets = max_subsets
        self.max_skolem = max_skolem

    def fit(self, X, y=None):
        T0 = check_constraint_set(X, self.dom, self.cod)
        self.c1_ = check_clone(self.c1, self.dom)
        self.c2_ = check_clone(self.c2, self.cod)
        report = closure_of_constraints(T0, self.c1_, self.c2_, self._caps(), self._budgets())
        self.closure_ = report.closed
        self.exact_ = report.exact_within_caps
        self.functions_ = functions_satisfying(T0, self._caps(), self._budgets())
        return self

    def predict(self, X):
        check_is_fitted(self, "closure_")
        return np.array([check_constraint(c, self.dom, self.cod) in self.closure_ for c in X])


class InvariantGenerator(TransformerMixin, BaseEstimator):
    """Map each relation to the smallest invariant of a clone containing it."""

    def __init__(self, clone=None, dom=2):
        self.clone = clone
        self.dom = dom

    def fit(self, X=None, y=None):
        self.clone_ = check_clone(self.clone, self.dom)
        return self

    def transform(self, X):
        check_is_fitted(self, "clone_")
        return [generate_invariant(self.clone_, check_relation(R, dom=self.dom)) for R in X]
