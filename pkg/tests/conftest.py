import pytest

from anzahl.field import construct_field
from anzahl.forms import standard_form


@pytest.fixture(scope="session")
def gf():
    return construct_field


@pytest.fixture(scope="session")
def symplectic4():
    return standard_form("symplectic", 4, construct_field(2))


@pytest.fixture(scope="session")
def hermitian3():
    return standard_form("hermitian", 3, construct_field(4))


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, note = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {note}")
