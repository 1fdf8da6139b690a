import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clonecraft import (
    ArityCaps,
    CloneSpec,
    DomainMismatch,
    FunctionClass,
    clone_levels,
    clone_member,
    compose,
    generate_clone_level,
    is_stable_left,
    is_stable_right,
    projections,
    stability_closure,
)
from clonecraft.verify import random_class

from conftest import AND, NOT, OR, P1, P2, XOR, XOR3, cls, fn

CAP2 = ArityCaps(2, 4)


def test_projections_examples():
    assert projections(2, 1) == cls(fn(1, "01"))
    assert projections(2, 2) == cls(P1, P2)
    assert projections(3, 1) == cls(fn(1, "012", 3), dom=3, cod=3)


def test_compose_examples():
    assert compose(cls(NOT), cls(NOT)) == cls(fn(1, "01"))
    assert compose(cls(AND), projections(2, 2)) == cls(P1, P2, AND)
    assert compose(cls(AND), cls(XOR3)) == cls(XOR3)


def test_compose_domain_mismatch():
    with pytest.raises(DomainMismatch):
        compose(cls(NOT), cls(fn(1, "012", 3), dom=3, cod=3))


def test_compose_mixed_domains():
    # {0,1,2} -> {0,1} followed by a Boolean outer function
    inner = FunctionClass.of([fn(1, "011", 3, 2)])
    out = compose(cls(NOT), inner)
    assert out == FunctionClass.of([fn(1, "100", 3, 2)])


def test_stable_right_examples():
    lattice = CloneSpec.of([AND, OR])
    level = clone_levels(lattice, 2)
    J = projections(2, 1) | projections(2, 2)
    assert is_stable_right(level, J, CAP2)
    assert not is_stable_right(cls(NOT), J, CAP2)
    assert is_stable_right(cls(), cls(AND), CAP2)


def test_stable_left_examples():
    J = projections(2, 1) | projections(2, 2)
    assert is_stable_left(cls(AND, NOT, XOR), J, CAP2)
    assert not is_stable_left(cls(AND), cls(NOT), CAP2)
    assert is_stable_left(cls(fn(1, "01")), cls(XOR3), ArityCaps(3, 4))


def test_clone_level_examples():
    assert generate_clone_level(CloneSpec.projections(2), 2) == cls(P1, P2)
    assert generate_clone_level(CloneSpec.of([AND, OR]), 2) == cls(P1, P2, AND, OR)
    assert generate_clone_level(CloneSpec.of([XOR3]), 2) == cls(P1, P2)
    assert len(generate_clone_level(CloneSpec.of([AND, NOT]), 2)) == 16


def test_clone_member_examples():
    assert clone_member(CloneSpec.of([AND, NOT]), XOR)
    assert clone_member(CloneSpec.projections(2), P2)
    assert not clone_member(CloneSpec.of([XOR3]), XOR)


def test_three_element_chain_clone():
    mn = fn(2, "000011012", 3)
    # min alone on a chain: semilattice terms in two variables are x, y, min(x, y)
    assert len(generate_clone_level(CloneSpec.of([mn], 3), 2)) == 3


def test_stability_closure_examples(P):
    assert stability_closure(cls(NOT), P, P, CAP2) == cls(NOT, fn(2, "1100"), fn(2, "1010"))
    assert stability_closure(cls(), P, P, CAP2) == cls()
    assert stability_closure(cls(AND), P, P, CAP2) == cls(AND, fn(1, "01"), P1, P2)


POOL = [AND, OR, NOT, XOR, XOR3, fn(1, "00"), fn(1, "11"), fn(3, "00010111")]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(POOL), max_size=2, unique=True), st.integers(1, 3))
def test_clone_level_laws(gens, m):
    spec = CloneSpec.of(gens)
    level = generate_clone_level(spec, m)
    assert projections(2, m).members <= level.members
    for g in gens:
        assert compose(cls(g), level).members <= level.members
    if m <= 2 or len(level) <= 8:
        # with the whole level as generators each round costs |level| * rows**arity
        assert generate_clone_level(CloneSpec.of(level.members), m) == level


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_stability_closure_laws(seed):
    rng = random.Random(seed)
    c1 = CloneSpec.of(rng.sample(POOL[:4], rng.randint(0, 2)))
    c2 = CloneSpec.of(rng.sample(POOL[:4], rng.randint(0, 2)))
    K = random_class(rng, 2)
    L = K | random_class(rng, 2)
    closed = stability_closure(K, c1, c2, CAP2)
    assert K.members <= closed.members
    assert closed.members <= stability_closure(L, c1, c2, CAP2).members
    assert stability_closure(closed, c1, c2, CAP2) == closed
    assert is_stable_right(closed, clone_levels(c1, 2), CAP2)
    assert is_stable_left(closed, clone_levels(c2, 2), CAP2)
