"""Seeded property batteries behind ``clonecraft verify``.

Every suite draws its cases from ``random.Random(seed)`` so a run is fully
determined by ``(suite, seed, caps, cases)``.  A failing case is shrunk
greedily (dropping list entries while the failure persists) before it is
reported.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product

from .classes import (
    ArityCaps,
    Budgets,
    CloneSpec,
    clone_levels,
    compose,
    is_stable_left,
    is_stable_right,
    stability_closure,
)
from .constraints import (
    Constraint,
    ConstraintSet,
    is_relaxation,
    make_empty,
    make_equality,
    make_trivial,
    satisfies,
    class_satisfies,
    is_invariant_constraint,
)
from .core import FiniteFunction, FunctionClass, Relation, all_points
from .galois import closure_of_class, closure_of_constraints, separating_constraint, verify_lemma4_equivalence
from .invariants import generate_invariant, image, is_invariant
from .minors import Scheme, Slot, tight_minor_constraint, tight_minor

__all__ = ["SuiteResult", "SUITES", "verify", "boolean_pool", "curated_closed_classes"]

F = FiniteFunction.from_string


def boolean_pool():
    """Named Boolean operations used to draw random clones."""
    return {
        "and": F(2, "0001"),
        "or": F(2, "0111"),
        "not": F(1, "10"),
        "c0": F(1, "00"),
        "c1": F(1, "11"),
        "xor2": F(2, "0110"),
        "xor3": F(3, "01101001"),
        "maj": F(3, "00010111"),
        "impl": F(2, "1101"),
    }


@dataclass
class SuiteResult:
    name: str
    seed: int
    caps: ArityCaps
    cases: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self):
        return not self.failures

    def report(self):
        """Deterministic text (wall time is deliberately left out)."""
        lines = [
            f"suite {self.name} seed={self.seed} fn-cap={self.caps.fn_arity_cap} "
            f"rel-cap={self.caps.rel_arity_cap}",
            f"cases {self.cases}",
            f"failures {len(self.failures)}",
        ]
        lines += [f"  counterexample: {msg}" for msg in self.failures]
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


# random objects --------------------------------------------------------------


def random_function(rng, arity, dom=2, cod=2):
    return FiniteFunction(arity, dom, cod, tuple(rng.randrange(cod) for _ in range(dom**arity)))


def random_class(rng, per_arity=3, arities=(1, 2), dom=2, cod=2):
    fs = set()
    for n in arities:
        for _ in range(rng.randint(0, per_arity)):
            fs.add(random_function(rng, n, dom, cod))
    return FunctionClass(dom, cod, frozenset(fs))


def random_clone(rng, max_gens=2):
    pool = boolean_pool()
    names = rng.sample(sorted(pool), rng.randint(0, max_gens))
    return CloneSpec.of([pool[n] for n in names], 2)


def random_relation(rng, arity, dom=2, p=0.5):
    pts = all_points(arity, dom).tolist()
    return Relation(arity, dom, frozenset(tuple(t) for t in pts if rng.random() < p))


def random_scheme(rng, arities, max_target=2, max_vars=2):
    m = rng.randint(1, max_target)
    k = rng.randint(0, max_vars)
    slots = [Slot("t", i) for i in range(m)] + [Slot("v", i) for i in range(k)]
    return Scheme(m, k, tuple(tuple(rng.choice(slots) for _ in range(n)) for n in arities))


def _subset(rng, rel):
    return Relation(rel.arity, rel.dom, frozenset(t for t in rel.sorted() if rng.random() < 0.5))


def _superset(rng, rel):
    full = Relation.full(rel.arity, rel.dom)
    return Relation(rel.arity, rel.dom, rel.tuples | {t for t in full.sorted() if rng.random() < 0.5})


def random_relaxation(rng, c):
    return Constraint(_subset(rng, c.antecedent), _superset(rng, c.consequent))


# shrinking -------------------------------------------------------------------


def _without(cls, f):
    return FunctionClass(cls.dom, cls.cod, cls.members - {f})


def _shrink(case, check, keys):
    """Greedily drop class members under ``keys`` while ``check`` still fails."""
    msg = check(case)
    improved = True
    while improved:
        improved = False
        for key in keys:
            cls = case[key]
            for f in sorted(cls.members, key=lambda g: (g.arity, g.table)):
                smaller = dict(case, **{key: _without(cls, f)})
                try:
                    m = check(smaller)
                except Exception:
                    m = None
                if m:
                    case, msg, improved = smaller, m, True
                    break
            if improved:
                break
    return msg


# suites ------------------------------------------------------------------------


def _assoc_check(case):
    I, J, K = case["I"], case["J"], case["K"]
    left = compose(compose(I, J), K)
    right = compose(I, compose(J, K))
    if not left.members <= right.members:
        return f"(IJ)K not within I(JK): I={I} J={J} K={K}"
    if case["clone"] and left != right:
        return f"(IJ)K != I(JK) for clone-level J: I={I} J={J} K={K}"
    return None


def suite_assoc(rng, caps, budgets, cases):
    # With at most q members of K per arity, a clone truncated at q already
    # holds every minor the equality argument needs; q = 2 here.
    for _ in range(cases):
        I = random_class(rng, 3)
        K = random_class(rng, 2)
        if rng.random() < 0.5:
            J, is_clone = clone_levels(random_clone(rng), 2), True
        else:
            J, is_clone = random_class(rng, 3), False
        case = {"I": I, "J": J, "K": K, "clone": is_clone}
        keys = ("I", "K") if is_clone else ("I", "J", "K")
        yield case, _assoc_check, keys


def _lemma1_check(case):
    f, spec, R, S = case["f"], case["spec"], case["R"], case["S"]
    lhs = satisfies(f, Constraint(generate_invariant(spec, R), S))
    comps = compose(FunctionClass.of([f]), clone_levels(spec, 2))
    rhs = all(satisfies(g, Constraint(R, S)) for g in comps)
    if lhs != rhs:
        return f"f={f} clone={spec} R={R} S={S}: satisfies(CR,S)={lhs}, all of fC satisfy={rhs}"
    return None


def suite_lemma1(rng, caps, budgets, cases):
    # |R| <= 2 keeps clone levels up to arity 2 exhaustive for this check.
    for _ in range(cases):
        m = rng.randint(1, 2)
        f = random_function(rng, rng.randint(1, 2))
        pts = [tuple(p) for p in all_points(m, 2).tolist()]
        R = Relation(m, 2, frozenset(rng.sample(pts, rng.randint(1, 2))))
        if rng.random() < 0.5:
            S = image(f, R) | random_relation(rng, m, p=0.3)
        else:
            S = random_relation(rng, m)
        yield {"f": f, "spec": random_clone(rng), "R": R, "S": S}, _lemma1_check, ()


def _minors_check(case):
    f, family, scheme, probes = case["f"], case["family"], case["scheme"], case["probes"]
    if not all(satisfies(f, c) for c in family):
        return None
    tight = tight_minor_constraint(family, scheme)
    for c in [tight] + probes:
        if not satisfies(f, c):
            return f"f={f} satisfies {[str(x) for x in family]} but not minor {c} via {scheme}"
    return None


def suite_minors(rng, caps, budgets, cases):
    for _ in range(cases):
        f = random_function(rng, rng.randint(1, 2))
        family = []
        for _ in range(rng.randint(1, 3)):
            R = random_relation(rng, rng.randint(1, 2))
            S = image(f, R) | random_relation(rng, R.arity, p=0.3) if rng.random() < 0.8 else random_relation(rng, R.arity)
            family.append(Constraint(R, S))
        scheme = random_scheme(rng, [c.arity for c in family])
        tight = tight_minor_constraint(family, scheme)
        probes = [random_relaxation(rng, tight) for _ in range(3)]
        yield {"f": f, "family": family, "scheme": scheme, "probes": probes}, _minors_check, ()


def _szabo_check(case):
    spec, family, scheme = case["spec"], case["family"], case["scheme"]
    R = tight_minor(family, scheme)
    if not is_invariant(spec, R):
        return f"clone={spec} family={[str(x) for x in family]} via {scheme} gives non-invariant {R}"
    return None


def suite_szabo(rng, caps, budgets, cases):
    for _ in range(cases):
        spec = random_clone(rng)
        family = [
            generate_invariant(spec, random_relation(rng, rng.randint(1, 2), p=0.3))
            for _ in range(rng.randint(1, 3))
        ]
        scheme = random_scheme(rng, [R.arity for R in family])
        yield {"spec": spec, "family": family, "scheme": scheme}, _szabo_check, ()


def _all_constraints(m, a=2, b=2):
    rels_a = [Relation.from_codes(c, m, a) for c in _subsets(a**m)]
    rels_b = [Relation.from_codes(c, m, b) for c in _subsets(b**m)]
    return [Constraint(R, S) for R in rels_a for S in rels_b]


def _subsets(n):
    for mask in range(2**n):
        yield [i for i in range(n) if mask >> i & 1]


def suite_relaxation(rng, caps, budgets, cases):
    # Exhaustive over |A| = |B| = 2, constraint arity <= 2, function arity <= 2.
    functions = [
        FiniteFunction(n, 2, 2, t) for n in (1, 2) for t in product(range(2), repeat=2**n)
    ]
    for m in (1, 2):
        cs = _all_constraints(m)
        pairs = [(c0, c) for c0 in cs for c in cs if is_relaxation(c, c0)]
        trivial, empty = make_trivial(2, 2, m), make_empty(2, 2, m)

        def check(case, cs=cs, pairs=pairs, trivial=trivial, empty=empty):
            f = case["f"]
            if not (satisfies(f, trivial) and satisfies(f, empty)):
                return f"f={f} fails a trivial or empty constraint of arity {trivial.arity}"
            sat = {c: satisfies(f, c) for c in cs}
            for c0, c in pairs:
                if sat[c0] and not sat[c]:
                    return f"f={f} satisfies {c0} but not its relaxation {c}"
            return None

        for f in functions:
            yield {"f": f}, check, ()


def curated_closed_classes():
    """Stability-closed Boolean classes at function arity cap 2 (projection clones)."""
    P = CloneSpec.projections(2)
    caps2 = ArityCaps(2, 4)
    projections_only = FunctionClass.of([F(1, "01"), F(2, "0011"), F(2, "0101")])
    conj = stability_closure(FunctionClass.of([F(2, "0001")]), P, P, caps2)
    triple = stability_closure(FunctionClass.of([F(3, "01101001")]), P, P, ArityCaps(3, 8)).upto(2)
    everything = FunctionClass.of(
        FiniteFunction(n, 2, 2, t) for n in (1, 2) for t in product(range(2), repeat=2**n)
    )
    return {
        "projections": projections_only,
        "minors-of-and": conj,
        "minors-of-xor3": triple,
        "all": everything,
    }


def _theorem1_check(case):
    K, g, caps = case["K"], case["g"], case["caps"]
    P = CloneSpec.projections(2)
    if case["round_trip"]:
        closed = closure_of_class(K, P, P, caps).closed
        if closed != K:
            return f"closure of {case['label']} differs: {closed}"
        return None
    c = separating_constraint(K, g, P, P, caps)
    if c is None:
        return f"{g} outside {case['label']} reported inseparable"
    if not class_satisfies(K, c) or satisfies(g, c) or not is_invariant_constraint(c, P, P):
        return f"invalid separator {c} for {g} against {case['label']}"
    return None


def suite_theorem1(rng, caps, budgets, cases):
    caps = ArityCaps(2, 4) if caps is None else caps
    everything = curated_closed_classes()["all"]
    for label, K in curated_closed_classes().items():
        yield {"K": K, "g": None, "caps": caps, "label": label, "round_trip": True}, _theorem1_check, ()
        for g in everything:
            if g not in K:
                yield {"K": K, "g": g, "caps": caps, "label": label, "round_trip": False}, _theorem1_check, ()


def random_pp_constraint_set(rng, max_arity=2, size=3):
    cs = set()
    for _ in range(rng.randint(1, size)):
        m = rng.randint(1, max_arity)
        cs.add(Constraint(random_relation(rng, m), random_relation(rng, m)))
    return ConstraintSet(2, 2, frozenset(cs))


def _theorem3_check(case):
    T0, caps, budgets = case["T0"], case["caps"], case["budgets"]
    P = CloneSpec.projections(2)
    closed = closure_of_constraints(T0, P, P, caps, budgets).closed
    again = closure_of_constraints(closed, P, P, caps, budgets).closed
    if again != closed:
        return f"closure of {[str(c) for c in T0]} is not idempotent"
    if not T0.members <= closed.members:
        return f"closure of {[str(c) for c in T0]} lost members"
    needed = [make_equality(2, 2)] + [make_empty(2, 2, m) for m in range(1, caps.rel_arity_cap + 1)]
    if any(c not in closed for c in needed):
        return f"closure of {[str(c) for c in T0]} misses equality or empty constraints"
    if not verify_lemma4_equivalence(closed, P, P, caps, budgets, seed=case["seed"]):
        return f"closure of {[str(c) for c in T0]} fails the minor-closure equivalence"
    return None


def suite_theorem3(rng, caps, budgets, cases):
    caps = ArityCaps(2, 2) if caps is None else caps
    for i in range(cases):
        T0 = random_pp_constraint_set(rng, caps.rel_arity_cap)
        yield {"T0": T0, "caps": caps, "budgets": budgets, "seed": i}, _theorem3_check, ()


def l01_clone():
    return CloneSpec.of([F(3, "01101001")], 2)


def _l01_check(case):
    K, caps = case["K"], case["caps"]
    L = l01_clone()
    levels = clone_levels(L, caps.fn_arity_cap)
    closed = closure_of_class(K, L, L, caps).closed
    stable = is_stable_right(K, levels, caps) and is_stable_left(K, levels, caps)
    if (closed == K) != stable:
        return f"K={K}: closure fixes K is {closed == K}, stable is {stable}"
    if closed != stability_closure(K, L, L, caps):
        return f"K={K}: closure differs from stability closure"
    if not (is_stable_right(closed, levels, caps) and is_stable_left(closed, levels, caps)):
        return f"K={K}: closure is not stable"
    return None


def suite_l01(rng, caps, budgets, cases):
    caps = ArityCaps(3, 8) if caps is None else caps
    L = l01_clone()
    for i in range(cases):
        K = random_class(rng, 1, arities=(1, 2, 3))
        if not K.members:
            K = FunctionClass.of([random_function(rng, rng.randint(1, 3))])
        if i % 2:
            K = stability_closure(K, L, L, caps)
        yield {"K": K, "caps": caps}, _l01_check, ("K",)


SUITES = {
    "assoc": (suite_assoc, 500, ArityCaps(2, 2)),
    "lemma1": (suite_lemma1, 300, ArityCaps(2, 2)),
    "minors": (suite_minors, 500, ArityCaps(2, 2)),
    "szabo": (suite_szabo, 500, ArityCaps(2, 2)),
    "relaxation": (suite_relaxation, None, ArityCaps(2, 2)),
    "theorem1": (suite_theorem1, None, ArityCaps(2, 4)),
    "theorem3": (suite_theorem3, 5, ArityCaps(2, 2)),
    "L01": (suite_l01, 10, ArityCaps(3, 8)),
}


def verify(name, seed=0, caps=None, budgets=None, cases=None) -> SuiteResult:
    """Run the named property battery; raises ``KeyError`` for unknown suites."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    runner, default_cases, default_caps = SUITES[name]
    caps = caps or default_caps
    budgets = budgets or Budgets()
    cases = cases if cases is not None else default_cases
    rng = random.Random(seed)
    result = SuiteResult(name, seed, caps)
    start = time.perf_counter()
    for case, check, keys in runner(rng, caps, budgets, cases):
        result.cases += 1
        msg = check(case)
        if msg:
            result.failures.append(_shrink(case, check, keys) if keys else msg)
    result.wall_time = time.perf_counter() - start
    return result
