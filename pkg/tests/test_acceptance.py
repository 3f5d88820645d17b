"""Acceptance gate: the full verification suite, one test per check.

Every test runs one registered check with the default seed and prints its
summary line, so `pytest tests/test_acceptance.py -v -s` reads as a report.
The same registry backs `sesquimat verify`.
"""

import pytest

from sesquimat.verify import CHECKS

DEFAULT_SEED = 2024

_BY_NAME = dict(CHECKS)


def _run(name):
    result = _BY_NAME[name](seed=DEFAULT_SEED)
    print(result.line())
    assert result.passed, result.line()
    assert result.cases > 0
    return result


@pytest.mark.parametrize("name", [name for name, _ in CHECKS])
def test_check(name):
    _run(name)


def test_registry_is_complete():
    assert len(CHECKS) == 14
    names = [name for name, _ in CHECKS]
    assert len(set(names)) == 14
