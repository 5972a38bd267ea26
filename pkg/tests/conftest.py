import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

# first calls may pay for JIT compilation or cache loading
settings.register_profile("default", deadline=None)
settings.load_profile("default")

_CRITERIA: dict[str, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(key, title): acceptance criterion covered by this test")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    key, title = marker.args
    entry = _CRITERIA.setdefault(key, [title, True, 0.0])
    entry[1] = entry[1] and call.excinfo is None
    entry[2] += call.duration


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA, key=lambda k: (int(k.rstrip('ab')), k)):
        title, ok, secs = _CRITERIA[key]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {key}: {title} ({secs:.1f}s)")


@pytest.fixture(scope="session")
def sweep_specs():
    """Canonical specs of criteria 1-3, deduplicated and sorted."""
    from thetadim.model import canonical_specs

    out = set(canonical_specs(3, 8)) | set(canonical_specs(4, 6))
    for m in range(2, 7):
        out.update(s for s in canonical_specs(m, 4) if s.n <= 32)
    return sorted(out, key=lambda s: s.lengths)
