from __future__ import annotations

import os
import random

import pytest

FULL = bool(os.environ.get("RSCOL_FULL"))

requires_full = pytest.mark.skipif(
    not FULL, reason="long-running sweep; set RSCOL_FULL=1 to include"
)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
