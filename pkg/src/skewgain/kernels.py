"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``SKEWGAIN_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("SKEWGAIN_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        pass

_MAX_COMPILED_N = 64


def simple_cycles(n, adj):
    if n > _MAX_COMPILED_N:
        return _pykernels.simple_cycles(n, adj)
    return _impl.simple_cycles(n, adj)


def disjoint_families(n, masks, order=-1):
    if n > _MAX_COMPILED_N:
        return _pykernels.disjoint_families(n, masks, order)
    return _impl.disjoint_families(n, masks, order)


def durand_kerner(coeffs, tol=1e-14, max_iter=2000):
    if len(coeffs) > 129:
        return _pykernels.durand_kerner(coeffs, tol, max_iter)
    return _impl.durand_kerner(coeffs, tol, max_iter)
