import random
from itertools import product

import pytest

from clonecraft import (
    CloneSpec,
    Constraint,
    ConstraintSet,
    DomainMismatch,
    FiniteFunction,
    Relation,
    ShapeError,
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
from clonecraft.verify import random_relation

from conftest import AND, C0, C1, LEQ, NOT, OR, cls, fn, rel


def all_functions(max_arity=2):
    return [FiniteFunction(n, 2, 2, t) for n in range(1, max_arity + 1) for t in product((0, 1), repeat=2**n)]


def all_relations(m):
    return [Relation.from_codes([i for i in range(2**m) if mask >> i & 1], m, 2) for mask in range(2 ** 2**m)]


def test_make_equality():
    assert make_equality(2, 2) == Constraint(rel(2, "00", "11"), rel(2, "00", "11"))
    assert make_equality(3, 2) == Constraint(rel(2, "00", "11", "22", dom=3), rel(2, "00", "11"))
    assert make_equality(1, 1) == Constraint(rel(2, "00", dom=1), rel(2, "00", dom=1))


def test_make_empty_and_trivial():
    assert make_empty(2, 2, 3) == Constraint(Relation.empty(3), Relation.empty(3))
    assert make_empty(3, 2, 2).antecedent.dom == 3
    assert make_trivial(2, 2, 1) == Constraint(rel(1, "0", "1"), rel(1, "0", "1"))
    assert len(make_trivial(2, 2, 2).antecedent) == 4
    assert make_trivial(3, 2, 1) == Constraint(rel(1, "0", "1", "2", dom=3), rel(1, "0", "1"))


def test_satisfies_examples():
    for f in all_functions():
        assert satisfies(f, make_equality(2, 2))
    assert not satisfies(NOT, Constraint(rel(1, "0"), rel(1, "0")))
    assert satisfies(AND, Constraint(LEQ, LEQ))


def test_satisfies_shape_error():
    with pytest.raises((ShapeError, DomainMismatch)):
        satisfies(fn(1, "012", 3), Constraint(LEQ, LEQ))


def test_class_satisfies_examples():
    leq = Constraint(LEQ, LEQ)
    assert class_satisfies(cls(), leq)
    assert class_satisfies(cls(AND, OR), leq)
    assert not class_satisfies(cls(AND, NOT), leq)


def test_every_function_satisfies_trivial_and_empty():
    for f in all_functions():
        for m in (1, 2, 3):
            assert satisfies(f, make_trivial(2, 2, m))
            assert satisfies(f, make_empty(2, 2, m))


def test_is_relaxation_examples():
    c0 = Constraint(rel(2, "00"), rel(2, "00", "11"))
    assert is_relaxation(Constraint(Relation.empty(2), Relation.full(2)), c0)
    assert is_relaxation(c0, c0)
    assert not is_relaxation(Constraint(rel(2, "00", "01"), rel(2, "00")), c0)
    assert not is_relaxation(make_trivial(2, 2, 1), c0)
    with pytest.raises(DomainMismatch):
        is_relaxation(make_trivial(3, 2, 2), c0)


def test_relaxation_preserves_satisfaction_exhaustively():
    for m in (1, 2):
        rels = all_relations(m)
        cons = [Constraint(R, S) for R in rels for S in rels]
        for f in all_functions():
            sat = [c for c in cons if satisfies(f, c)]
            for c0 in sat:
                for c in cons:
                    if is_relaxation(c, c0):
                        assert satisfies(f, c)


def test_relaxation_is_a_partial_order():
    rels = all_relations(1)
    cons = [Constraint(R, S) for R in rels for S in rels]
    for a in cons:
        assert is_relaxation(a, a)
        for b in cons:
            if is_relaxation(a, b) and is_relaxation(b, a):
                assert a == b
            for c in cons:
                if is_relaxation(a, b) and is_relaxation(b, c):
                    assert is_relaxation(a, c)


def test_intersect_consequents_examples():
    a = Constraint(rel(2, "01"), rel(2, "00", "01"))
    b = Constraint(rel(2, "01"), rel(2, "01", "11"))
    assert intersect_consequents([a, b]) == Constraint(rel(2, "01"), rel(2, "01"))
    assert intersect_consequents([a]) == a
    disjoint = Constraint(rel(2, "01"), rel(2, "10"))
    assert intersect_consequents([a, disjoint]) == Constraint(rel(2, "01"), Relation.empty(2))
    with pytest.raises(ValueError):
        intersect_consequents([])
    with pytest.raises(ValueError):
        intersect_consequents([a, Constraint(rel(2, "00"), rel(2, "00"))])


def test_intersect_consequents_satisfaction():
    rng = random.Random(3)
    for _ in range(200):
        R = random_relation(rng, 2)
        family = [Constraint(R, random_relation(rng, 2, p=0.7)) for _ in range(rng.randint(1, 3))]
        both = intersect_consequents(family)
        for f in all_functions():
            assert satisfies(f, both) == all(satisfies(f, c) for c in family)


def test_invariant_constraint_examples(P, monotone):
    lattice = CloneSpec.of([AND, OR])
    for spec in (P, monotone, CloneSpec.of([NOT])):
        assert is_invariant_constraint(make_equality(2, 2), spec, spec)
        assert is_invariant_constraint(make_empty(2, 2, 2), spec, spec)
    assert is_invariant_constraint(Constraint(LEQ, LEQ), lattice, lattice)
    assert not is_invariant_constraint(Constraint(rel(1, "0"), rel(1, "0")), CloneSpec.of([NOT]), P)


def test_cc_relaxation_examples(P, monotone):
    eq = make_equality(2, 2)
    assert is_cc_relaxation(eq, eq, P, P)
    extreme = Constraint(Relation.empty(2), Relation.full(2))
    assert is_cc_relaxation(extreme, eq, monotone, monotone)
    assert not is_cc_relaxation(Constraint(rel(2, "01"), Relation.full(2)), Constraint(LEQ, LEQ), monotone, monotone)


def test_constraint_set_order():
    T = ConstraintSet.of([Constraint(LEQ, LEQ), make_trivial(2, 2, 1)])
    assert [c.arity for c in T.ordered()] == [1, 2]
    assert str(Constraint(LEQ, LEQ)) == "({00,01,11}, {00,01,11})"
    assert Constraint(LEQ, LEQ) in T and len(T) == 2


def test_monotone_unary_members_satisfy_leq():
    leq = Constraint(LEQ, LEQ)
    assert all(satisfies(f, leq) for f in (C0, C1, fn(1, "01")))
