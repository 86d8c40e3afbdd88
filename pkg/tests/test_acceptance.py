"""The eight acceptance criteria at full size; each reports one PASS/FAIL line."""

import pytest

from conftest import ACCEPTANCE_LINES
from inducedsub import acceptance


@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(number):
    result = getattr(acceptance, f"criterion_{number}")()
    ACCEPTANCE_LINES[number] = result.line()
    print(result.line())
    for failure in result.failures[:10]:
        print("  " + failure)
    assert result.passed, result.line()
