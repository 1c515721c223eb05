import numpy as np
import pytest

from mincodes import LinearCode, gf


def random_code(rng, k, n, q, nonzero_columns=True):
    """Random full-rank [n,k]_q generator, optionally without zero columns."""
    while True:
        mat = rng.integers(0, q, size=(k, n), dtype=np.uint8)
        if nonzero_columns and not mat.any(axis=0).all():
            continue
        if gf.rank(mat, q) == k:
            return LinearCode(mat, q)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
