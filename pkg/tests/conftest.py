import pytest

from jldist.oracle.cache import CACHE_ENV, gl_table


@pytest.fixture(scope="session", autouse=True)
def cache_dir(tmp_path_factory):
    """Keep character-table caches of the test session out of the user's home."""
    path = tmp_path_factory.mktemp("tables")
    mp = pytest.MonkeyPatch()
    mp.setenv(CACHE_ENV, str(path))
    yield path
    mp.undo()


@pytest.fixture(scope="session")
def tables(cache_dir):
    built = {}

    def get(m, q):
        if (m, q) not in built:
            built[m, q] = gl_table(m, q)[0]
        return built[m, q]

    return get


_ACCEPTANCE: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        _ACCEPTANCE[number] = (title, status, call.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, status, seconds = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d} {status}  {title} ({seconds:.2f} s)")
