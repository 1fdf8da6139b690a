"""Closure operators of the function/constraint Galois connection.

On a finite domain every class is locally closed, so a class is definable
by (C1, C2)-constraints exactly when it is stable under right composition
with C1 and left composition with C2.  The separating constraint for an
``n``-ary outsider has arity ``|A|**n``; below that relation cap the
closures computed here are the double duals restricted to the caps and are
flagged as not exact.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

import numpy as np

from . import _kernel
from .classes import (
    DEFAULT_BUDGETS,
    DEFAULT_CAPS,
    ArityCaps,
    Budgets,
    CloneSpec,
    stability_closure,
)
from .constraints import (
    Constraint,
    ConstraintSet,
    is_invariant_constraint,
    is_relaxation,
    satisfies,
)
from .core import FiniteFunction, FunctionClass, Relation, all_points
from .errors import BudgetExceeded, DomainMismatch, ShapeError
from .invariants import _image_codes, enumerate_invariants, generate_invariant
from .minors import Scheme, Slot, tight_minor_constraint

log = logging.getLogger(__name__)

__all__ = [
    "ClosureReport",
    "canonical_constraint",
    "separating_constraint",
    "closure_of_class",
    "constraints_satisfied",
    "functions_satisfying",
    "closure_of_constraints",
    "verify_lemma4_equivalence",
    "minor_closure_sides",
]


@dataclass(frozen=True)
class ClosureReport:
    closed: Union[FunctionClass, ConstraintSet]
    caps: ArityCaps
    exact_within_caps: bool
    witness: Optional[Union[Constraint, FiniteFunction]] = None


def _check_clones(a, b, c1, c2):
    if c1.dom != a or c2.dom != b:
        raise DomainMismatch(f"clones live on ({c1.dom}, {c2.dom}), class on ({a}, {b})")


def canonical_constraint(
    K: FunctionClass, n: int, c1: CloneSpec, caps: ArityCaps = DEFAULT_CAPS
) -> Constraint:
    """The constraint built from the ``n`` coordinate columns of ``A^n``.

    The antecedent is the ``c1``-invariant generated by the columns; the
    consequent collects ``f(columns)``, i.e. the tables of the ``n``-ary
    members of ``K``.
    """
    if c1.dom != K.dom:
        raise DomainMismatch("antecedent clone must live on the domain of the class")
    m = K.dom**n
    if m > caps.rel_arity_cap:
        raise BudgetExceeded(f"canonical constraint for arity {n}", m, caps.rel_arity_cap)
    columns = all_points(n, K.dom).T
    R0 = Relation(m, K.dom, frozenset(map(tuple, columns.tolist())))
    S = Relation(m, K.cod, frozenset(f.table for f in K.at_arity(n)))
    return Constraint(generate_invariant(c1, R0), S)


def separating_constraint(
    K: FunctionClass,
    g: FiniteFunction,
    c1: CloneSpec,
    c2: CloneSpec,
    caps: ArityCaps = DEFAULT_CAPS,
) -> Optional[Constraint]:
    """A (C1, C2)-constraint satisfied by all of ``K`` and failed by ``g``.

    ``K`` is first replaced by its stability closure.  Returns ``None`` when
    ``g`` lies in that closure.
    """
    if (g.dom, g.cod) != (K.dom, K.cod):
        raise DomainMismatch(f"{g!r} does not map between the domains of the class")
    _check_clones(K.dom, K.cod, c1, c2)
    if g.arity > caps.fn_arity_cap:
        raise ShapeError(f"{g} exceeds the arity cap {caps.fn_arity_cap}")
    closed = stability_closure(K, c1, c2, caps)
    if closed != K:
        log.info("class was not stable; separating against its closure (%d members)", len(closed))
    c = canonical_constraint(closed, g.arity, c1, caps)
    if satisfies(g, c):
        return None
    return c


def _exact_closure(K, c1, c2, caps):
    closed = stability_closure(K, c1, c2, caps)
    out = set()
    for n in range(1, caps.fn_arity_cap + 1):
        c = canonical_constraint(closed, n, c1, caps)
        # g(columns) is the table of g, so only tables in S can survive.
        candidates = [FiniteFunction(n, K.dom, K.cod, t) for t in c.consequent.sorted()]
        verdicts = _kernel.ordered_map(lambda g, c=c: satisfies(g, c), candidates)
        out.update(g for g, ok in zip(candidates, verdicts) if ok)
    return FunctionClass(K.dom, K.cod, frozenset(out))


def _all_tables(n, a, b, budgets):
    count = b ** (a**n)
    if count > budgets.max_subsets:
        raise BudgetExceeded(f"enumerating {n}-ary functions", count, budgets.max_subsets)
    return np.ascontiguousarray(all_points(a**n, b))


def _truncated_closure(K, c1, c2, caps, budgets):
    # g fails some K-satisfied (C1,C2)-constraint of arity <= cap iff for some
    # set P of <= cap points of A^n, g|P is outside C2(K . C1{columns of P}).
    # Repeated points and point order only produce minors of the same test.
    a, b = K.dom, K.cod
    cache = {}

    def allowed(rows):
        key = frozenset(rows)
        if key not in cache:
            R = generate_invariant(c1, Relation(len(rows[0]), a, key))
            S = generate_invariant(c2, Relation.from_codes(_image_codes(K, R), R.arity, b))
            cache[key] = S.codes()
        return cache[key]

    out = []
    for n in range(1, caps.fn_arity_cap + 1):
        tables = _all_tables(n, a, b, budgets)
        alive = np.ones(tables.shape[0], dtype=bool)
        pts = all_points(n, a)
        for m in range(1, min(caps.rel_arity_cap, a**n) + 1):
            for chosen in combinations(range(a**n), m):
                rows = tuple(map(tuple, pts[list(chosen)].T.tolist()))
                codes = _kernel.row_codes(tables[:, list(chosen)], b)
                alive &= np.isin(codes, allowed(rows))
        out.extend(FiniteFunction(n, a, b, tuple(t)) for t in tables[alive].tolist())
    return FunctionClass(a, b, frozenset(out))


def closure_of_class(
    K: FunctionClass,
    c1: CloneSpec,
    c2: CloneSpec,
    caps: ArityCaps = DEFAULT_CAPS,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> ClosureReport:
    """Functions (arity within cap) satisfying every (C1, C2)-constraint ``K`` satisfies."""
    _check_clones(K.dom, K.cod, c1, c2)
    if any(f.arity > caps.fn_arity_cap for f in K.members):
        raise ShapeError(f"class has members above the arity cap {caps.fn_arity_cap}")
    exact = caps.rel_arity_cap >= K.dom**caps.fn_arity_cap
    if not K.members:
        return ClosureReport(K, caps, exact)
    if exact:
        closed = _exact_closure(K, c1, c2, caps)
    else:
        closed = _truncated_closure(K, c1, c2, caps, budgets)
    return ClosureReport(closed, caps, exact)


def _invariants_pair(c1, c2, m, budgets):
    inv1 = enumerate_invariants(c1, m, budgets)
    inv2 = inv1 if c2 == c1 else enumerate_invariants(c2, m, budgets)
    return inv1, inv2


def constraints_satisfied(
    K: FunctionClass,
    c1: CloneSpec,
    c2: CloneSpec,
    caps: ArityCaps = DEFAULT_CAPS,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> ConstraintSet:
    """All (C1, C2)-constraints of arity within cap satisfied by every member of ``K``."""
    _check_clones(K.dom, K.cod, c1, c2)
    out = set()
    for m in range(1, caps.rel_arity_cap + 1):
        inv1, inv2 = _invariants_pair(c1, c2, m, budgets)
        masks = np.array([S.mask() for S in inv2])
        for R in inv1:
            need = _image_codes(K, R)
            ok = masks[:, need].all(axis=1) if need.size else np.ones(len(inv2), dtype=bool)
            out.update(Constraint(R, inv2[i]) for i in np.flatnonzero(ok))
    return ConstraintSet(K.dom, K.cod, frozenset(out))


def _row_points(R: Relation, n: int) -> np.ndarray:
    """Point indices of every ``n``-tuple of rows of ``R``, one row per choice."""
    rows = R.array()
    k, m = rows.shape
    idx = np.zeros((1,) * n + (m,), dtype=np.int64)
    for t in range(n):
        shape = [1] * n + [m]
        shape[t] = k
        idx = idx * R.dom + rows.reshape(shape)
    return np.unique(idx.reshape(-1, m), axis=0)


def functions_satisfying(
    T: ConstraintSet, caps: ArityCaps = DEFAULT_CAPS, budgets: Budgets = DEFAULT_BUDGETS
) -> FunctionClass:
    """Every function of arity within cap that satisfies all members of ``T``."""
    a, b = T.a_size, T.b_size
    out = []
    for n in range(1, caps.fn_arity_cap + 1):
        tables = _all_tables(n, a, b, budgets)
        alive = np.ones(tables.shape[0], dtype=bool)
        for c in T:
            if not c.antecedent.tuples:
                continue
            points = _row_points(c.antecedent, n)
            allowed = c.consequent.codes()
            for chunk in np.array_split(points, max(1, points.shape[0] // 256)):
                values = tables[alive][:, chunk]  # (alive, choices, m)
                codes = values @ (b ** np.arange(c.arity - 1, -1, -1, dtype=np.int64))
                keep = np.isin(codes, allowed).all(axis=1)
                alive[np.flatnonzero(alive)[~keep]] = False
            if not alive.any():
                break
        out.extend(FiniteFunction(n, a, b, tuple(t)) for t in tables[alive].tolist())
    return FunctionClass(a, b, frozenset(out))


def closure_of_constraints(
    T0: ConstraintSet,
    c1: CloneSpec,
    c2: CloneSpec,
    caps: ArityCaps = DEFAULT_CAPS,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> ClosureReport:
    """(C1, C2)-constraints satisfied by every function that satisfies ``T0``."""
    _check_clones(T0.a_size, T0.b_size, c1, c2)
    for c in T0:
        if not is_invariant_constraint(c, c1, c2):
            raise ValueError(f"constraint {c} is not a (C1, C2)-constraint")
    K = functions_satisfying(T0, caps, budgets)
    closed = constraints_satisfied(K, c1, c2, caps, budgets)
    exact = caps.fn_arity_cap >= T0.a_size**caps.rel_arity_cap
    return ClosureReport(closed, caps, exact)


# minor-closure harness ---------------------------------------------------


def _random_scheme(rng, family, caps, budgets, dom):
    m = rng.randint(1, caps.rel_arity_cap)
    max_vars = 0
    while max_vars < 2 and dom ** (max_vars + 1) <= budgets.max_skolem:
        max_vars += 1
    k = rng.randint(0, max_vars)
    slots = [Slot("t", i) for i in range(m)] + [Slot("v", i) for i in range(k)]
    maps = tuple(tuple(rng.choice(slots) for _ in range(c.arity)) for c in family)
    return Scheme(m, k, maps)


def _random_subset(rng, rel: Relation):
    return Relation(rel.arity, rel.dom, frozenset(t for t in rel.sorted() if rng.random() < 0.5))


def _random_superset(rng, rel: Relation):
    full = Relation.full(rel.arity, rel.dom)
    extra = frozenset(t for t in full.sorted() if rng.random() < 0.5)
    return Relation(rel.arity, rel.dom, rel.tuples | extra)


def _in_relaxations(c, members):
    return any(is_relaxation(c, c0) for c0 in members if c0.arity == c.arity)


def minor_closure_sides(
    T0: ConstraintSet,
    c1: CloneSpec,
    c2: CloneSpec,
    caps: ArityCaps = DEFAULT_CAPS,
    budgets: Budgets = DEFAULT_BUDGETS,
    samples: int = 60,
    seed: int = 0,
):
    """Sampled checks of the two minor-closure conditions.

    Returns ``(t0_closed, relaxations_closed, counterexample)`` where the
    first flag says ``T0`` absorbs every sampled (C1, C2)-conjunctive minor
    of its members, the second that the set of relaxations of ``T0`` absorbs
    every sampled conjunctive minor of its members.  ``counterexample`` is a
    text description of the first violation seen, or ``None``.
    """
    rng = random.Random(seed)
    members = T0.ordered()
    a_closed = b_closed = True
    example = None
    if not members:
        return a_closed, b_closed, example
    inv = {}

    def invariants(m):
        if m not in inv:
            inv[m] = _invariants_pair(c1, c2, m, budgets)
        return inv[m]

    for _ in range(samples):
        family = [rng.choice(members) for _ in range(rng.randint(1, 3))]
        scheme = _random_scheme(rng, family, caps, budgets, T0.a_size)
        tight = tight_minor_constraint(family, scheme, budgets)
        if a_closed:
            inv1, inv2 = invariants(scheme.target)
            lower = [R for R in inv1 if R.tuples <= tight.antecedent.tuples]
            upper = [S for S in inv2 if S.tuples >= tight.consequent.tuples]
            pairs = [(R, S) for R in lower for S in upper]
            if len(pairs) > 64:
                pairs = rng.sample(pairs, 64)
            for R, S in pairs:
                c = Constraint(R, S)
                if c not in T0:
                    a_closed = False
                    example = example or f"(C1,C2)-minor {c} of {[str(x) for x in family]} via {scheme}"
                    break
        if b_closed:
            relaxed = [
                Constraint(_random_subset(rng, c.antecedent), _random_superset(rng, c.consequent))
                for c in family
            ]
            loose = tight_minor_constraint(relaxed, scheme, budgets)
            probes = [loose] + [
                Constraint(_random_subset(rng, loose.antecedent), _random_superset(rng, loose.consequent))
                for _ in range(3)
            ]
            for c in probes:
                if not _in_relaxations(c, members):
                    b_closed = False
                    example = example or f"minor {c} of relaxed family via {scheme}"
                    break
        if not (a_closed or b_closed):
            break
    return a_closed, b_closed, example


def verify_lemma4_equivalence(
    T0: ConstraintSet,
    c1: CloneSpec,
    c2: CloneSpec,
    caps: ArityCaps = DEFAULT_CAPS,
    budgets: Budgets = DEFAULT_BUDGETS,
    samples: int = 60,
    seed: int = 0,
) -> bool:
    """True when both minor-closure conditions hold on every sample."""
    a_closed, b_closed, _ = minor_closure_sides(T0, c1, c2, caps, budgets, samples, seed)
    return a_closed and b_closed
