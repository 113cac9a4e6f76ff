import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wordperiods import Word  # noqa: E402


@pytest.fixture
def W():
    return Word.parse


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(results):
        ok, line = results[tag]
        terminalreporter.write_line(f"{tag} {'PASS' if ok else 'FAIL'}  {line}")
