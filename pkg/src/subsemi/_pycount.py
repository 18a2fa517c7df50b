"""Pure-Python counting kernels: closed-subset scan over bitmask constraints.

A constraint (pair_mask, result_mask) means: any subset containing all of
pair_mask must also intersect result_mask. These are the hot loops; a
compiled twin lives in _fastcount.pyx and is selected in subsemi.kernel.
"""

BACKEND = "python"


def count_closed(n, constraints):
    """Number of subsets of {0..n-1} closed under every constraint."""
    if not constraints:
        return 1 << n
    cons = list(constraints)
    count = 0
    for s in range(1 << n):
        for pm, rb in cons:
            if s & pm == pm and not s & rb:
                break
        else:
            count += 1
    return count


def enumerate_closed(n, constraints):
    """Ascending list of all closed subsets as bitmasks."""
    cons = list(constraints)
    out = []
    for s in range(1 << n):
        for pm, rb in cons:
            if s & pm == pm and not s & rb:
                break
        else:
            out.append(s)
    return out
