import numpy as np
import pytest

from quantlog.io import random_hermitian, random_unit_vector

CORPUS_NS = (2, 4, 8, 16)
CORPUS_RHOS = (0.1, 0.3, 0.5, 0.8)
CORPUS_SIZE = 40


def corpus_entries(size: int = CORPUS_SIZE):
    """Seeded Hermitian corpus cycling through every (N, rho) pair."""
    out = []
    for i in range(size):
        N = CORPUS_NS[i % len(CORPUS_NS)]
        rho = CORPUS_RHOS[(i // len(CORPUS_NS)) % len(CORPUS_RHOS)]
        out.append((N, rho, random_hermitian(N, rho, 1000 + i), random_unit_vector(N, 5000 + i)))
    return out


@pytest.fixture(scope="session")
def corpus():
    return corpus_entries()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
