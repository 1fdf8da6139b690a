import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from clonecraft import ClassClosure, Constraint, ConstraintClosure, InvariantGenerator

from conftest import AND, LEQ, NOT, OR, rel


def test_class_closure_fit_predict_transform():
    est = ClassClosure(rel_arity_cap=4).fit(["2:0001"])
    assert est.exact_
    assert list(est.predict(["1:01", "2:0011", "2:0111"])) == [True, True, False]
    seps = est.transform([OR, "2:0001"])
    assert seps[1] is None
    assert not seps[0] is None


def test_class_closure_with_clone_generators():
    est = ClassClosure(c1=[AND, OR], c2=[AND, OR], rel_arity_cap=4).fit([AND])
    # right composition yields the projections, so or(p1, p2) arrives from the left
    assert OR in est.closure_ and NOT not in est.closure_
    assert est.c1_.dom == 2


def test_params_round_trip():
    est = ClassClosure(fn_arity_cap=1, rel_arity_cap=2)
    twin = clone(est)
    assert twin.get_params() == est.get_params()
    assert est.set_params(fn_arity_cap=2).fn_arity_cap == 2


def test_not_fitted():
    with pytest.raises(NotFittedError):
        ClassClosure().predict(["1:01"])
    with pytest.raises(NotFittedError):
        InvariantGenerator().transform([LEQ])


def test_constraint_closure():
    est = ConstraintClosure().fit([(LEQ, LEQ)])
    assert len(est.functions_) == 9
    assert est.predict([Constraint(LEQ, LEQ), (rel(1, "0"), rel(1, "1"))]).tolist() == [True, False]


def test_invariant_generator():
    out = InvariantGenerator(clone=[NOT]).fit_transform([[(0, 0)], rel(1, "0")])
    assert out == [rel(2, "00", "11"), rel(1, "0", "1")]


def test_predict_returns_bool_array():
    est = ClassClosure(rel_arity_cap=4).fit([NOT])
    assert isinstance(est.predict([NOT]), np.ndarray)
