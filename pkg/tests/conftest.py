import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from synth import make_csv_bytes  # noqa: E402


@pytest.fixture
def synth_csv(tmp_path):
    path = tmp_path / "tweets.csv"
    path.write_bytes(make_csv_bytes(600, seed=7))
    return path


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_RESULTS
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, title, elapsed, detail in sorted(ACCEPTANCE_RESULTS):
        line = f"criterion {number}: {status} - {title} ({elapsed:.2f} s)"
        terminalreporter.write_line(line + (f" :: {detail}" if detail else ""))
