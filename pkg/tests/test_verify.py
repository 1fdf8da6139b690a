import pytest

from clonecraft import verify
from clonecraft.verify import SUITES


def test_szabo_example():
    result = verify("szabo", 42)
    assert result.passed and result.cases >= 500


def test_assoc_example():
    assert verify("assoc", 7).passed


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify("nosuch", 0)


@pytest.mark.parametrize("name", sorted(set(SUITES) - {"L01", "theorem1", "theorem3"}))
def test_suites_pass_small(name):
    result = verify(name, 3, cases=40)
    assert result.passed, result.report()


def test_report_is_deterministic():
    a, b = verify("minors", 9, cases=50), verify("minors", 9, cases=50)
    assert a.report() == b.report()
    assert a.report().endswith("PASS")
