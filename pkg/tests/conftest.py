from __future__ import annotations

import os
import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from qumbral.exactnum import QPoly, QRat  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SAMPLE_Q = [Fraction(2), Fraction(3), Fraction(1, 3), Fraction(5, 2), Fraction(-1)]

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
qpolys = st.lists(small_fractions, max_size=4).map(QPoly)
nonzero_qpolys = qpolys.filter(bool)
qrats = st.builds(QRat, qpolys, nonzero_qpolys)
nonzero_qrats = qrats.filter(bool)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
