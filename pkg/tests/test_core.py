import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from clonecraft import FiniteFunction, FunctionClass, Relation, ShapeError, apply, apply_componentwise, canonical_order
from clonecraft.core import decode_point, encode_point

from conftest import AND, ID, NOT, OR, XOR3, fn, rel


@pytest.mark.parametrize(
    "point, base, index", [((1, 0), 2, 2), ((0, 0, 0), 3, 0), ((2, 1), 3, 7)]
)
def test_encode_point(point, base, index):
    assert encode_point(point, base) == index


@pytest.mark.parametrize(
    "index, arity, base, point", [(5, 3, 2, (1, 0, 1)), (0, 2, 3, (0, 0)), (3, 1, 4, (3,))]
)
def test_decode_point(index, arity, base, point):
    assert decode_point(index, arity, base) == point


def test_decode_out_of_range():
    with pytest.raises(IndexError):
        decode_point(8, 3, 2)


@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_point_round_trip(arity, base, data):
    i = data.draw(st.integers(0, base**arity - 1))
    assert encode_point(decode_point(i, arity, base), base) == i
    p = tuple(data.draw(st.lists(st.integers(0, base - 1), min_size=arity, max_size=arity)))
    assert decode_point(encode_point(p, base), arity, base) == p


def test_apply_examples():
    assert apply(AND, (1, 1)) == 1
    assert apply(XOR3, (1, 1, 0)) == 0
    assert apply(OR, (1, 0)) == 1
    assert AND(0, 1) == 0


def test_apply_shape_errors():
    with pytest.raises(ShapeError):
        apply(AND, (1,))
    with pytest.raises(ShapeError):
        apply(AND, (1, 2))


def test_apply_componentwise_examples():
    assert apply_componentwise(AND, [(0, 1, 1), (1, 1, 0)]) == (0, 1, 0)
    assert apply_componentwise(ID, [(0, 1)]) == (0, 1)
    assert apply_componentwise(XOR3, [(0, 1)] * 3) == (0, 1)
    with pytest.raises(ShapeError):
        apply_componentwise(AND, [(0, 1), (1,)])


@given(st.integers(1, 3), st.integers(2, 3), st.data())
def test_componentwise_projection_returns_row(n, base, data):
    k = data.draw(st.integers(0, n - 1))
    rows = data.draw(
        st.lists(st.lists(st.integers(0, base - 1), min_size=3, max_size=3), min_size=n, max_size=n)
    )
    p = FiniteFunction.projection(n, k, base)
    assert apply_componentwise(p, rows) == tuple(rows[k])


def test_function_validation():
    with pytest.raises(ShapeError):
        fn(2, "001")
    with pytest.raises(ValueError):
        fn(1, "02")
    with pytest.raises(ValueError):
        FiniteFunction(0, 2, 2, (0,))


def test_function_constructors():
    assert FiniteFunction.from_callable(2, lambda x, y: x & y) == AND
    assert FiniteFunction.projection(2, 0) == fn(2, "0011")
    assert FiniteFunction.constant(1, 1) == fn(1, "11")
    assert str(AND) == "2:0001"
    assert fn(2, "0101").is_projection() and not AND.is_projection()


def test_relation_basics():
    r = rel(2, "00", "01", "11")
    assert str(r) == "{00,01,11}"
    assert (0, 1) in r and (1, 0) not in r
    assert Relation.equality(3).sorted() == [(0, 0), (1, 1), (2, 2)]
    assert len(Relation.full(3)) == 8 and len(Relation.empty(2)) == 0
    assert Relation.from_codes(r.codes(), 2, 2) == r
    assert (r & rel(2, "01", "10")) == rel(2, "01")
    with pytest.raises(ShapeError):
        rel(2, "0")
    with pytest.raises(ValueError):
        rel(1, "2")


def test_canonical_order_examples():
    assert canonical_order(rel(2, "10", "01")) == [(0, 1), (1, 0)]
    assert canonical_order(Relation.empty(2)) == []
    K = FunctionClass.of([fn(2, "0111"), fn(1, "10")])
    assert canonical_order(K) == [fn(1, "10"), fn(2, "0111")]


@given(st.lists(st.sampled_from([AND, OR, NOT, ID, XOR3]), unique=True), st.randoms())
def test_canonical_order_is_insensitive_to_input_order(fs, rnd):
    shuffled = list(fs)
    rnd.shuffle(shuffled)
    once = canonical_order(FunctionClass.of(fs, 2, 2))
    assert canonical_order(FunctionClass.of(shuffled, 2, 2)) == once
    assert canonical_order(once) == once


def test_function_class_accessors():
    K = FunctionClass.of([AND, OR, NOT])
    assert K.arities() == [1, 2]
    assert K.upto(1) == FunctionClass.of([NOT])
    assert np.array_equal(K.tables(2), np.array([[0, 0, 0, 1], [0, 1, 1, 1]]))
    assert str(FunctionClass.of([NOT])) == "{1:10}"
