import pytest

from admissibility.numberfield import field_from_coeffs, rationals


def desc(*c):
    """Field from coefficients written leading-first."""
    return field_from_coeffs(list(reversed(c)))


@pytest.fixture(scope="session")
def fields():
    return {
        "Q": rationals(),
        "Qi": desc(1, 0, 1),
        "Qs2": desc(1, 0, -2),
        "Qsm2": desc(1, 0, 2),
        "Qs5": desc(1, 0, -5),
        "Qs7": desc(1, 0, -7),
        "Z9": desc(1, 0, 0, 1, 0, 0, 1),
        "cubic9": desc(1, 0, -3, 1),
        "Z5": desc(1, 1, 1, 1, 1),
        "Z6": desc(1, -1, 1),
        "s6s7": desc(1, 0, -26, 0, 1),
    }


# -- acceptance summary: one PASS/FAIL line per criterion -------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    if rep.when == "call" or rep.failed:
        ok = rep.passed and _criteria.get(n, (True, ""))[0]
        _criteria[n] = (ok, item.name)
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {item.name}")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        ok, name = _criteria[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {name}")
