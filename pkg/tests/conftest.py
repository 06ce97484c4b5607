import pytest

from modbounds.corpus import ladder_corpus, standard_corpus

_ACCEPTANCE: dict[str, str] = {}


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def ladders():
    return ladder_corpus()


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or "test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("test_criterion_", 1)[1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: (int("".join(c for c in s.split("_")[0] if c.isdigit())), s)):
        terminalreporter.write_line(f"criterion {name:<40} {_ACCEPTANCE[name]}")
