import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from spectral_delta import make_complex, full_simplex
from spectral_delta.fixtures import rp2_complex


@pytest.fixture
def hollow_triangle():
    return make_complex(3, [(1, 2), (1, 3), (2, 3)])


@pytest.fixture
def two_points():
    return make_complex(2, [(1,), (2,)])


@pytest.fixture
def triangle():
    return full_simplex(3)


@pytest.fixture
def irrelevant2():
    return make_complex(2, [], include_empty=True)


@pytest.fixture(scope="session")
def rp2():
    return rp2_complex()


@pytest.fixture(scope="session")
def small_corpus():
    """Every non-void complex on up to 3 vertices."""
    from spectral_delta.checks import enumerate_complexes
    out = []
    for n in (1, 2, 3):
        out.extend(enumerate_complexes(n))
    return out
