import pytest

from subsemi import _pycount
from subsemi.kernel import available_backends, backend, count_closed, enumerate_closed
from subsemi.randomgen import random_partial_algebra, random_semilattice

HAS_CYTHON = "cython" in available_backends()


def test_backend_reports_name():
    assert backend() in ("python", "cython")


def test_no_constraints_shortcut():
    assert count_closed(4, []) == 16
    assert enumerate_closed(2, []) == [0, 1, 2, 3]


def test_enumeration_matches_count(rng):
    for _ in range(30):
        n = rng.randint(1, 9)
        pa = random_partial_algebra(rng, n)
        cons = pa.closure_constraints()
        subs = enumerate_closed(n, cons)
        assert len(subs) == count_closed(n, cons)
        assert subs == sorted(subs)


@pytest.mark.skipif(not HAS_CYTHON, reason="compiled kernel not built")
def test_backends_agree(rng):
    fast = available_backends()["cython"]
    for _ in range(60):
        n = rng.randint(1, 10)
        if rng.random() < 0.5:
            cons = random_partial_algebra(rng, n).closure_constraints()
        else:
            cons = random_semilattice(rng, n).closure_constraints()
        assert fast.count_closed(n, cons) == _pycount.count_closed(n, cons)
        assert fast.enumerate_closed(n, cons) == _pycount.enumerate_closed(n, cons)


@pytest.mark.skipif(not HAS_CYTHON, reason="compiled kernel not built")
def test_backends_agree_on_catalog():
    from subsemi.catalog import build_named, catalog_ids
    fast = available_backends()["cython"]
    for id_ in catalog_ids():
        s = build_named(id_).structure
        cons = s.closure_constraints()
        assert fast.count_closed(s.n, cons) == _pycount.count_closed(s.n, cons)
