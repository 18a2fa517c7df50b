"""Subuniverse counting for total join-semilattices and partial binary algebras.

Two independent algorithms are provided: a full 2^n bitmask scan
(count_subuniverses_bruteforce, backed by the kernel) and a recursive
case split on a pivot element with memoization (count_subuniverses_split).
Relative counts sigma_k are exact dyadic rationals throughout.
"""

from dataclasses import dataclass
from fractions import Fraction

from subsemi import kernel
from subsemi.errors import SizeLimitError
from subsemi.order import JoinSemilattice

BRUTE_MAX_N = 25
ENUM_MAX_N = 20
DEFAULT_K = 5


@dataclass(frozen=True)
class PartialBinaryAlgebra:
    """n elements with a join defined only on selected pairs.

    defined_joins holds (i, j, k) triples with i < j meaning i v j = k.
    No associativity or order axioms are imposed; the structures from
    case analyses are plain constraint systems.
    """

    n: int
    defined_joins: tuple

    def __init__(self, n, defined_joins):
        if n < 1:
            raise ValueError("partial algebras here are nonempty; n = 0 is rejected")
        triples = []
        seen = set()
        for i, j, k in defined_joins:
            if i == j:
                raise ValueError(f"join of ({i}, {j}) is not a pair")
            a, b = min(i, j), max(i, j)
            if not (0 <= a and b < n and 0 <= k < n):
                raise ValueError(f"join ({i}, {j}) -> {k} out of range for n={n}")
            if (a, b) in seen:
                raise ValueError(f"pair ({a}, {b}) defined twice")
            seen.add((a, b))
            triples.append((a, b, k))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "defined_joins", tuple(sorted(triples)))

    def closure_constraints(self):
        return [
            ((1 << i) | (1 << j), 1 << k)
            for i, j, k in self.defined_joins
            if k != i and k != j
        ]


@dataclass(frozen=True)
class SubuniverseReport:
    """Exact |Sub(.)| plus the relative count sigma_k = count * 2^(k-n)."""

    count: int
    sigma: Fraction
    k: int
    n: int
    subsets: tuple = None

    def __post_init__(self):
        assert self.sigma * Fraction(2) ** (self.n - self.k) == self.count


def _as_mask(n, subset):
    if isinstance(subset, int):
        return subset
    m = 0
    for e in subset:
        m |= 1 << e
    return m


def is_subuniverse(a, subset):
    """True iff every defined join with both arguments in the subset lands in it."""
    s = _as_mask(a.n, subset)
    for pm, rb in a.closure_constraints():
        if s & pm == pm and not s & rb:
            return False
    return True


def sigma_value(count, n, k=DEFAULT_K):
    return Fraction(count) * Fraction(2) ** (k - n)


def count_subuniverses_bruteforce(a, k=DEFAULT_K, include_subsets=False):
    """Exact count by scanning all 2^n subsets with the bitmask closure test."""
    if a.n > BRUTE_MAX_N:
        raise SizeLimitError(f"brute force limited to n <= {BRUTE_MAX_N}, got {a.n}")
    subsets = None
    if include_subsets:
        subsets = tuple(enumerate_subuniverses(a))
        count = len(subsets)
    else:
        count = kernel.count_closed(a.n, a.closure_constraints())
    return SubuniverseReport(count=count, sigma=sigma_value(count, a.n, k), k=k,
                             n=a.n, subsets=subsets)


def enumerate_subuniverses(a):
    """All closed subsets as an ascending list of bitmasks."""
    if a.n > ENUM_MAX_N:
        raise SizeLimitError(f"enumeration limited to n <= {ENUM_MAX_N}, got {a.n}")
    return kernel.enumerate_closed(a.n, a.closure_constraints())


def sigma(a, k=DEFAULT_K):
    """Relative number of subuniverses sigma_k(a), an exact dyadic rational."""
    return count_subuniverses_bruteforce(a, k).sigma


# -- recursive case-split counter (independent second algorithm) -------


def _clauses_of(a):
    """Normalize closure constraints into (antecedent_mask, consequent_bit) clauses."""
    return tuple(sorted(a.closure_constraints()))


def _propagate(clauses, in_mask, out_mask):
    """Apply decisions to clauses until fixpoint.

    Returns (clauses, in_mask, out_mask) or None on contradiction. A clause
    with consequent 0 is a forbidden antecedent.
    """
    clauses = list(clauses)
    while True:
        forced = 0
        nxt = []
        for ant, cons in clauses:
            if ant & out_mask:
                continue                      # vacuous: an antecedent member is out
            ant &= ~in_mask
            if cons & in_mask:
                continue                      # satisfied
            if cons & out_mask:
                cons = 0
            if ant == 0:
                if cons == 0:
                    return None               # forbidden set fully present
                forced |= cons
                continue
            nxt.append((ant, cons))
        if not forced:
            return tuple(sorted(set(nxt))), in_mask, out_mask
        in_mask |= forced
        if in_mask & out_mask:
            return None
        clauses = nxt


def _count_clauses(n, clauses, decided_mask, memo):
    free = ((1 << n) - 1) & ~decided_mask
    touched = 0
    for ant, cons in clauses:
        touched |= ant | cons
    outside = free & ~touched
    mult = 1 << bin(outside).count("1")
    free &= touched
    if not clauses:
        return mult
    key = (clauses, free)
    hit = memo.get(key)
    if hit is not None:
        return hit * mult
    # propagation keeps every remaining antecedent nonempty and undecided
    ant0 = clauses[0][0]
    var = (ant0 & -ant0).bit_length() - 1
    total = 0
    for value in (False, True):
        branch = _propagate(clauses, 1 << var if value else 0, 0 if value else 1 << var)
        if branch is None:
            continue
        cl, inm, outm = branch
        total += _count_clauses(n, cl, decided_mask | (1 << var) | inm | outm, memo)
    # children count the untouched vars too, so factor them out before caching
    memo[key] = total // mult
    return total


def _count_with(a, in_mask=0, out_mask=0, memo=None):
    """Count closed subsets with some elements forced in/out, by case splitting."""
    state = _propagate(_clauses_of(a), in_mask, out_mask)
    if state is None:
        return 0
    clauses, inm, outm = state
    if memo is None:
        memo = {}
    return _count_clauses(a.n, clauses, inm | outm, memo)


def count_subuniverses_split(a, pivot, k=DEFAULT_K):
    """Exact count as (subsets avoiding the pivot) + (subsets containing it).

    Recursive case split with memoization; independent of the brute-force scan.
    """
    if a.n > BRUTE_MAX_N:
        raise SizeLimitError(f"split count limited to n <= {BRUTE_MAX_N}, got {a.n}")
    if not 0 <= pivot < a.n:
        raise ValueError(f"pivot {pivot} out of range")
    memo = {}
    avoiding = _count_with(a, out_mask=1 << pivot, memo=memo)
    containing = _count_with(a, in_mask=1 << pivot, memo=memo)
    count = avoiding + containing
    return SubuniverseReport(count=count, sigma=sigma_value(count, a.n, k), k=k, n=a.n)


@dataclass(frozen=True)
class SplitParts:
    """The three-way pivot decomposition used throughout the case analyses."""

    pivot: int
    avoiding: int
    containing_disjoint: int
    containing_meeting: int

    @property
    def total(self):
        return self.avoiding + self.containing_disjoint + self.containing_meeting


def split_parts(a, pivot, rest_mask=None):
    """Counts (pivot not in S; pivot in S and S disjoint from rest; pivot in S meeting rest).

    rest defaults to every element except the pivot and, for total
    semilattices, the top.
    """
    full = (1 << a.n) - 1
    if rest_mask is None:
        rest_mask = full & ~(1 << pivot)
        if isinstance(a, JoinSemilattice):
            rest_mask &= ~(1 << a.top)
    memo = {}
    avoiding = _count_with(a, out_mask=1 << pivot, memo=memo)
    disjoint = _count_with(a, in_mask=1 << pivot, out_mask=rest_mask, memo=memo)
    total = avoiding + _count_with(a, in_mask=1 << pivot, memo=memo)
    return SplitParts(pivot, avoiding, disjoint, total - avoiding - disjoint)


# -- trace bound --------------------------------------------------------


def sigma_trace_bound(L, subset, k=DEFAULT_K):
    """Upper bound t * 2^(k-|H|) where t counts distinct traces H & S over Sub(L)."""
    h = _as_mask(L.n, subset)
    traces = {s & h for s in enumerate_subuniverses(L)}
    return Fraction(len(traces)) * Fraction(2) ** (k - bin(h).count("1"))
