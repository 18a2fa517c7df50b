"""Kernel selection: compiled extension when available, pure Python otherwise.

Set SUBSEMI_PURE=1 to force the Python kernels (used by the benchmark and
by tests that compare the two implementations).
"""

import os

from subsemi import _pycount

try:
    from subsemi import _fastcount
except ImportError:
    _fastcount = None

if os.environ.get("SUBSEMI_PURE") or _fastcount is None:
    _impl = _pycount
else:
    _impl = _fastcount


def backend():
    return _impl.BACKEND


def count_closed(n, constraints):
    return _impl.count_closed(n, constraints)


def enumerate_closed(n, constraints):
    return _impl.enumerate_closed(n, constraints)


def available_backends():
    out = {"python": _pycount}
    if _fastcount is not None:
        out["cython"] = _fastcount
    return out
