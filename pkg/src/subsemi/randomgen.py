"""Seeded random structures for property checks and randomized suites."""

from subsemi.counting import PartialBinaryAlgebra
from subsemi.enumeration import _upclosed_extensions
from subsemi.order import Poset, to_semilattice


def random_semilattice(rng, n):
    """Uniform-ish random walk over the minimal-extension generation tree."""
    up = (1,)
    for _ in range(n - 1):
        choices = _upclosed_extensions(up)
        u = rng.choice(choices)
        up = up + (u | (1 << len(up)),)
    return to_semilattice(Poset(up))


def random_partial_algebra(rng, n, max_joins=None):
    """Random constraint system: distinct pairs with arbitrary results."""
    if max_joins is None:
        max_joins = 2 * n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    m = rng.randint(0, min(max_joins, len(pairs)))
    joins = [(i, j, rng.randrange(n)) for i, j in pairs[:m]]
    return PartialBinaryAlgebra(n, joins)
