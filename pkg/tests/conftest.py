import pytest

from clonecraft import CloneSpec, FiniteFunction, FunctionClass, Relation


def fn(arity, digits, dom=2, cod=None):
    return FiniteFunction.from_string(arity, digits, dom, cod)


def rel(arity, *tuples, dom=2):
    return Relation.of(arity, tuples, dom)


def cls(*functions, dom=2, cod=2):
    return FunctionClass(dom, cod, frozenset(functions))


AND = fn(2, "0001")
OR = fn(2, "0111")
XOR = fn(2, "0110")
XOR3 = fn(3, "01101001")
NOT = fn(1, "10")
ID = fn(1, "01")
C0 = fn(1, "00")
C1 = fn(1, "11")
P1 = fn(2, "0011")
P2 = fn(2, "0101")
LEQ = rel(2, "00", "01", "11")


@pytest.fixture
def P():
    return CloneSpec.projections(2)


@pytest.fixture
def monotone():
    return CloneSpec.of([AND, OR, C0, C1])
