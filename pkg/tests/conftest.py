import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        r = mod.RESULTS[k]
        terminalreporter.write_line(f"criterion {k} ({r.title}): {'PASS' if r.passed else 'FAIL'}"
                                    f"  [{r.seconds:.1f} s]")
