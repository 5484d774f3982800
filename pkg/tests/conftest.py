import numpy as np
import pytest
from hypothesis import strategies as st

from admeans.harness.generate import random_ad, random_complex, random_pd

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def ad_pair(rng):
    return random_ad(rng, 3), random_ad(rng, 3)


def seeds():
    return st.integers(min_value=0, max_value=2**32 - 1)


def dims(lo=1, hi=6):
    return st.integers(min_value=lo, max_value=hi)


def ad_from(seed, n):
    return random_ad(np.random.default_rng(seed), n)


def pd_from(seed, n):
    return random_pd(np.random.default_rng(seed), n)


def complex_from(seed, n):
    return random_complex(np.random.default_rng(seed), n)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
