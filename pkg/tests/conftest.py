import os

import pytest


def pytest_addoption(parser):
    parser.addoption("--run-long", action="store_true", default=False, help="run the full proof-forest tier")
    parser.addoption(
        "--ramsey-file",
        default=os.environ.get("HCSEARCH_RAMSEY_FILE"),
        help="graph6 file with the 27-vertex Ramsey graphs (also HCSEARCH_RAMSEY_FILE)",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "long: full proof-forest runs (enable with --run-long)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-long"):
        return
    skip = pytest.mark.skip(reason="long tier; pass --run-long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def ramsey_file(request):
    path = request.config.getoption("--ramsey-file")
    if not path or not os.path.exists(path):
        pytest.skip("Ramsey dataset not available; pass --ramsey-file or set HCSEARCH_RAMSEY_FILE")
    return path


# --- acceptance summary ------------------------------------------------------
# Tests marked ``acceptance(n, title)`` are folded into one line per criterion,
# printed at the end of the session.

_CRITERIA: dict[int, dict] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "_acceptance", None)
    if marker is None:
        return
    n, title = marker
    entry = _CRITERIA.setdefault(n, {"title": title, "outcomes": []})
    if report.when == "call" or report.outcome != "passed":
        entry["outcomes"].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    m = item.get_closest_marker("acceptance")
    if m is not None:
        outcome.get_result()._acceptance = m.args


def _verdict(outcomes):
    if "failed" in outcomes:
        return "FAIL"
    if outcomes and all(o == "skipped" for o in outcomes):
        return "SKIP"
    return "PASS" if outcomes else "NOT RUN"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        entry = _CRITERIA[n]
        outs = entry["outcomes"]
        tail = "" if _verdict(outs) == "PASS" else f" ({outs.count('failed')} failed, {outs.count('skipped')} skipped)"
        terminalreporter.write_line(f"criterion {n}: {_verdict(outs)} - {entry['title']}{tail}")
