import numpy as np
import pytest

from animlab.signal_core import step_from_events


def random_step_signal(rng, n_events=6, span=5.0, gap_min=0.0, lo=-10.0, hi=10.0):
    """Random step signal with strictly increasing event times."""
    times = np.sort(rng.uniform(0.0, span, n_events))
    while np.any(np.diff(times) <= gap_min):
        times = np.sort(rng.uniform(0.0, span, n_events))
    values = rng.uniform(lo, hi, n_events)
    return step_from_events(rng.uniform(lo, hi), list(zip(times, values)))


@pytest.fixture
def rng():
    return np.random.default_rng(20260824)
