import pytest

from pfsemi.oracle import DEFAULT_BOUND

_ACCEPTANCE: dict[int, list[str]] = {}


def pytest_addoption(parser):
    parser.addoption(
        "--bound",
        type=int,
        default=DEFAULT_BOUND,
        help="largest Frobenius number the oracle may enumerate in tests",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): acceptance criterion number n")


@pytest.fixture
def oracle_bound(request):
    return request.config.getoption("--bound")


def pytest_runtest_logreport(report):
    marker = dict(report.user_properties).get("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE.setdefault(marker, []).append(report.outcome)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            item.user_properties.append(("acceptance", m.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        outcomes = _ACCEPTANCE[n]
        if "failed" in outcomes:
            verdict = "FAIL"
        elif all(o == "skipped" for o in outcomes):
            verdict = "SKIP"
        else:
            verdict = "PASS"
        terminalreporter.write_line(f"criterion {n:>2}: {verdict} ({len(outcomes)} test(s))")
