"""Preservation of relations, invariance and generated invariants."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from . import _kernel
from .classes import DEFAULT_BUDGETS, Budgets, CloneSpec, _left_closure
from .core import FiniteFunction, FunctionClass, Relation, all_points, relation_key
from .errors import BudgetExceeded, DomainMismatch

__all__ = [
    "image",
    "preserves",
    "is_invariant",
    "generate_invariant",
    "enumerate_invariants",
]


def _image_codes(F: FunctionClass, R: Relation) -> np.ndarray:
    rows = R.array()
    found = [np.zeros(0, dtype=np.int64)]
    for f in F:
        found.append(_kernel.combine_codes(f.table, F.dom, [rows] * f.arity, F.cod))
    return np.unique(np.concatenate(found))


def image(F, R: Relation) -> Relation:
    """The relation ``FR`` of all ``f(r_1, .., r_n)`` for ``f`` in ``F``, ``r_i`` in ``R``.

    ``F`` may be a single function.  Its codomain may differ from its domain,
    in which case the result lives on the codomain.
    """
    if isinstance(F, FiniteFunction):
        F = FunctionClass(F.dom, F.cod, frozenset([F]))
    if F.dom != R.dom:
        raise DomainMismatch(f"class reads a {F.dom}-set, relation lives on a {R.dom}-set")
    return Relation.from_codes(_image_codes(F, R), R.arity, F.cod)


def _check_endo(f: FiniteFunction, R: Relation):
    if f.dom != f.cod or f.dom != R.dom:
        raise DomainMismatch(f"{f!r} is not an operation on the {R.dom}-set of the relation")


def preserves(f: FiniteFunction, R: Relation) -> bool:
    _check_endo(f, R)
    return bool(np.isin(_image_codes(FunctionClass(f.dom, f.cod, frozenset([f])), R), R.codes()).all())


def is_invariant(spec: CloneSpec, R: Relation) -> bool:
    """Whether every generator (hence every member of the clone) preserves ``R``."""
    if spec.dom != R.dom:
        raise DomainMismatch(f"clone lives on a {spec.dom}-set, relation on a {R.dom}-set")
    return all(preserves(f, R) for f in spec.ordered_generators())


def generate_invariant(spec: CloneSpec, R: Relation) -> Relation:
    """Smallest invariant of ``spec`` containing ``R``."""
    if spec.dom != R.dom:
        raise DomainMismatch(f"clone lives on a {spec.dom}-set, relation on a {R.dom}-set")
    if not R.tuples:
        return R
    rows = _left_closure(R.array(), spec.ordered_generators(), spec.dom)
    return Relation(R.arity, R.dom, frozenset(map(tuple, rows.tolist())))


class _PreservationTable:
    """Precomputed point-level images used to filter many subsets quickly."""

    def __init__(self, spec: CloneSpec, m: int):
        self.size = spec.dom**m
        pts = all_points(m, spec.dom)
        self.luts = []
        for f in spec.ordered_generators():
            # lut[i_1, .., i_n] = index of f applied to points i_1..i_n
            grids = np.indices((self.size,) * f.arity).reshape(f.arity, -1)
            idx = np.zeros((grids.shape[1], m), dtype=np.int64)
            for t in range(f.arity):
                idx = idx * spec.dom + pts[grids[t]]
            values = np.asarray(f.table)[idx]
            weights = spec.dom ** np.arange(m - 1, -1, -1)
            self.luts.append(
                (f.arity, (values @ weights).reshape((self.size,) * f.arity))
            )

    def closed(self, members: np.ndarray, mask: np.ndarray) -> bool:
        for n, lut in self.luts:
            if not mask[lut[np.ix_(*([members] * n))]].all():
                return False
        return True


def enumerate_invariants(spec: CloneSpec, m: int, budgets: Budgets = DEFAULT_BUDGETS) -> list:
    """Every ``m``-ary invariant of ``spec`` by brute-force subset filtering.

    Output is sorted by :func:`relation_key`, so the empty relation comes first.
    """
    size = spec.dom**m
    required = 2**size
    if required > budgets.max_subsets:
        raise BudgetExceeded(f"enumerating subsets of {spec.dom}^{m}", required, budgets.max_subsets)
    table = _PreservationTable(spec, m)
    out = []
    for k in range(size + 1):
        for members in combinations(range(size), k):
            members = np.array(members, dtype=np.int64)
            mask = np.zeros(size, dtype=bool)
            mask[members] = True
            if k == 0 or table.closed(members, mask):
                out.append(Relation.from_codes(members, m, spec.dom))
    return sorted(out, key=relation_key)
