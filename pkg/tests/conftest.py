import random

import pytest

from subsemi.catalog import build_named
from subsemi.enumeration import enumerate_semilattices


@pytest.fixture(scope="session")
def all_structures():
    """Enumerated universes keyed by size, shared across the suite."""
    return {n: enumerate_semilattices(n).structures for n in range(1, 8)}


@pytest.fixture
def rng():
    return random.Random(20260811)


@pytest.fixture(scope="session")
def named():
    return {id_: build_named(id_) for id_ in
            ("B4", "H3", "H5", "K3", "H3_B4", "C5")}
