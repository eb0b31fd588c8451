import pytest

from solenoid.selftest import SUITES, run_suites


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name):
    [(_, passed, cases, err)] = run_suites(7, 40, [name])
    assert passed == cases, err
