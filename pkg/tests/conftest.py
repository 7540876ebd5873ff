import pytest

from tilepot.families import FamilySpec, generate, kneser, rook


@pytest.fixture(scope="session")
def petersen():
    return generate(kneser(5, 2))


@pytest.fixture(scope="session")
def r33():
    return generate(rook(3, 3))


@pytest.fixture(scope="session")
def cube():
    return generate(FamilySpec("cube"))


# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
