# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _pycount: closed-subset scan over bitmask constraints."""

from libc.stdlib cimport free, malloc

BACKEND = "cython"


def count_closed(int n, constraints):
    """Number of subsets of {0..n-1} closed under every constraint."""
    cdef Py_ssize_t m = len(constraints)
    cdef unsigned long long total = 1ULL << n
    cdef unsigned long long s, count = 0
    cdef Py_ssize_t i
    cdef bint ok
    if m == 0:
        return 1 << n
    cdef unsigned long long *pm = <unsigned long long *> malloc(m * sizeof(unsigned long long))
    cdef unsigned long long *rb = <unsigned long long *> malloc(m * sizeof(unsigned long long))
    if pm == NULL or rb == NULL:
        free(pm)
        free(rb)
        raise MemoryError()
    try:
        for i in range(m):
            pm[i] = constraints[i][0]
            rb[i] = constraints[i][1]
        s = 0
        while s < total:
            ok = True
            for i in range(m):
                if (s & pm[i]) == pm[i] and (s & rb[i]) == 0:
                    ok = False
                    break
            if ok:
                count += 1
            s += 1
        return count
    finally:
        free(pm)
        free(rb)


def enumerate_closed(int n, constraints):
    """Ascending list of all closed subsets as bitmasks."""
    cdef Py_ssize_t m = len(constraints)
    cdef unsigned long long total = 1ULL << n
    cdef unsigned long long s
    cdef Py_ssize_t i
    cdef bint ok
    out = []
    if m == 0:
        return list(range(1 << n))
    cdef unsigned long long *pm = <unsigned long long *> malloc(m * sizeof(unsigned long long))
    cdef unsigned long long *rb = <unsigned long long *> malloc(m * sizeof(unsigned long long))
    if pm == NULL or rb == NULL:
        free(pm)
        free(rb)
        raise MemoryError()
    try:
        for i in range(m):
            pm[i] = constraints[i][0]
            rb[i] = constraints[i][1]
        s = 0
        while s < total:
            ok = True
            for i in range(m):
                if (s & pm[i]) == pm[i] and (s & rb[i]) == 0:
                    ok = False
                    break
            if ok:
                out.append(s)
            s += 1
        return out
    finally:
        free(pm)
        free(rb)
