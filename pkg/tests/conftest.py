import pytest

from derivpoly import special_numbers


@pytest.fixture
def mutated_eulerian_recurrence(monkeypatch):
    """Inject an off-by-one into the ascent recurrence, with isolated caches.

    Row 1 stays [1]; every later row is corrupted, so anything built from the
    Eulerian triangle must stop verifying while independent routes (explicit
    sums, ODE series, exponential factors) are unaffected.
    """

    def bad_row(n, prev):
        row = []
        for k in range(n):
            left = prev[k] if k < n - 1 else 0
            right = prev[k - 1] if k >= 1 else 0
            row.append((k + 2) * left + (n - k) * right)
        return row

    special_numbers.reset_caches()
    monkeypatch.setattr(special_numbers, "_eulerian_next_row", bad_row)
    try:
        yield
    finally:
        monkeypatch.undo()
        special_numbers.reset_caches()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call":
        return
    label = getattr(item.function, "_criterion", None)
    if label:
        tr = item.config.pluginmanager.get_plugin("terminalreporter")
        if tr is not None:
            tr.write_line(f"{label}: {'PASS' if rep.passed else 'FAIL'}")
