"""Isomorph-free generation of all n-element join-semilattices.

The generator grows structures by one new minimal element per level: an
up-closed subset U of the parent works as the new element's strict up-set
whenever U meets every up-set in a set with a unique minimum (that minimum
becomes the new join). Deleting any minimal element of a join-semilattice
leaves a join-semilattice, so every structure is reached this way.

bruteforce_semilattices is the independent oracle for small n: it scans
all labeled partial orders directly.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from subsemi.errors import SizeLimitError
from subsemi.order import Poset, canonical_form, to_semilattice

DEFAULT_CEILING = 9
BRUTE_ENUM_MAX_N = 5


def enumeration_ceiling():
    env = os.environ.get("SUBUNIV_CEILING")
    return int(env) if env else DEFAULT_CEILING


@dataclass(frozen=True)
class EnumerationRun:
    n: int
    structures: tuple   # canonical representatives sorted by canonical code
    stats: dict         # candidates generated, duplicates rejected


def _upclosed_extensions(parent_up):
    """Valid strict up-sets for a new minimal element below an existing structure."""
    pn = len(parent_up)
    out = []
    for u in range(1, 1 << pn):
        ok = True
        m = u
        while m:
            i = (m & -m).bit_length() - 1
            if parent_up[i] & ~u:
                ok = False
                break
            m &= m - 1
        if not ok:
            continue
        for x in range(pn):
            common = u & parent_up[x]
            found = False
            mm = common
            while mm:
                k = (mm & -mm).bit_length() - 1
                if common & parent_up[k] == common:
                    found = True
                    break
                mm &= mm - 1
            if not found:
                ok = False
                break
        if ok:
            out.append(u)
    return out


def _expand_parent(parent_up):
    """All children of one parent as (canonical code, canonical up-sets)."""
    pn = len(parent_up)
    found = []
    for u in _upclosed_extensions(parent_up):
        child = Poset(parent_up + (u | (1 << pn),))
        cf = canonical_form(child)
        found.append((cf.code, child.relabel(cf.perm).up))
    return found


_level_cache = {}


def enumerate_semilattices(n, ceiling=None, workers=1):
    """All n-element join-semilattices up to isomorphism, deterministically ordered."""
    if n < 1:
        raise SizeLimitError("n must be at least 1")
    limit = ceiling if ceiling is not None else enumeration_ceiling()
    if n > limit:
        raise SizeLimitError(f"enumeration ceiling is {limit}; raise it explicitly for n={n}")
    if n in _level_cache:
        return _level_cache[n]
    if n == 1:
        run = EnumerationRun(1, (to_semilattice(Poset((1,))),),
                             {"candidates": 1, "duplicates": 0})
        _level_cache[1] = run
        return run
    parents = enumerate_semilattices(n - 1, limit, workers).structures
    parent_ups = [s.poset.up for s in parents]
    seen = {}
    candidates = 0
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_expand_parent, parent_ups, chunksize=8))
    else:
        batches = [_expand_parent(p) for p in parent_ups]
    for batch in batches:
        for code, upsets in batch:
            candidates += 1
            if code not in seen:
                seen[code] = upsets
    structures = tuple(
        to_semilattice(Poset(seen[code])) for code in sorted(seen)
    )
    run = EnumerationRun(
        n, structures,
        {"candidates": candidates, "duplicates": candidates - len(structures)},
    )
    _level_cache[n] = run
    return run


def bruteforce_semilattices(n):
    """Oracle enumeration: scan all labeled posets, keep join-total ones, dedup.

    Deliberately independent of the extension generator; limited to n <= 5.
    """
    if n > BRUTE_ENUM_MAX_N:
        raise SizeLimitError(f"brute-force enumeration limited to n <= {BRUTE_ENUM_MAX_N}")
    if n < 1:
        raise SizeLimitError("n must be at least 1")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = {}
    candidates = 0
    for assignment in product((0, 1, 2), repeat=len(pairs)):
        up = [1 << i for i in range(n)]
        for (i, j), state in zip(pairs, assignment):
            if state == 1:
                up[i] |= 1 << j
            elif state == 2:
                up[j] |= 1 << i
        # transitivity
        ok = True
        for i in range(n):
            m = up[i] & ~(1 << i)
            acc = up[i]
            while m:
                j = (m & -m).bit_length() - 1
                acc |= up[j]
                m &= m - 1
            if acc != up[i]:
                ok = False
                break
        if not ok:
            continue
        # all joins exist
        for i in range(n):
            for j in range(i + 1, n):
                common = up[i] & up[j]
                if not any(
                    common >> k & 1 and common & up[k] == common for k in range(n)
                ):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        candidates += 1
        p = Poset(tuple(up))
        cf = canonical_form(p)
        if cf.code not in seen:
            seen[cf.code] = p.relabel(cf.perm).up
    structures = tuple(to_semilattice(Poset(seen[code])) for code in sorted(seen))
    return EnumerationRun(
        n, structures,
        {"candidates": candidates, "duplicates": candidates - len(structures)},
    )
