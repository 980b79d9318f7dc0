"""Kernel backend selection.

The compiled module is used when it imports and the environment variable
``LATINTERP_PURE_PYTHON`` is unset or empty.  Lattices with more than 64
join-irreducibles always take the Python path.
"""

import os

from latinterp import _pykernels

BACKEND = "python"
_fast = _pykernels

if not os.environ.get("LATINTERP_PURE_PYTHON"):
    try:
        from latinterp import _ckernels as _fast
    except ImportError:
        _fast = _pykernels
    else:
        BACKEND = "cython"


def _pick(width):
    return _fast if width <= 64 else _pykernels


def eval_dnf(coeffs, point, width=0):
    return _pick(width).eval_dnf(coeffs, point)


def eval_many(coeffs, points, width=0):
    return _pick(width).eval_many(coeffs, points)


def value_table(coeffs, n, carrier, width=0):
    return _pick(width).value_table(coeffs, n, carrier)


def enumerate_monotone(n, elements, lo, hi, cap, width=0):
    return _pick(width).enumerate_monotone(n, elements, lo, hi, cap)
