import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

import config.config as config  # noqa: E402


@pytest.fixture(autouse=True)
def no_output_folder(monkeypatch):
    """Keep tests from writing event logs unless a test opts in."""
    monkeypatch.setattr(config, "OUTPUT_FOLDER", "")


@pytest.fixture
def relative_error():
    def compute(got, expected):
        import numpy as np

        got, expected = np.asarray(got), np.asarray(expected)
        scale = np.linalg.norm(expected)
        err = np.linalg.norm(got - expected)
        return err / scale if scale else err

    return compute
