"""Backend selection for the polynomial kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``VKNOT_PURE_PYTHON`` is set to a non-empty value, the
pure-Python implementation is used.  Calls that overflow the compiled
kernel's int64 coefficients are transparently rerun in pure Python, so the
result is always exact.
"""

import os

from . import _pykernel

BACKEND = "python"
_impl = _pykernel

if not os.environ.get("VKNOT_PURE_PYTHON"):
    try:
        from . import _ckernel as _impl
    except ImportError:  # extension not built
        _impl = _pykernel
    else:
        BACKEND = "cython"

pack = _pykernel.pack
unpack = _pykernel.unpack
BASE = _pykernel.BASE
HALF = _pykernel.HALF


def _dispatch(name):
    fast = getattr(_impl, name)
    slow = getattr(_pykernel, name)
    if fast is slow:
        return slow

    def call(*args):
        try:
            return fast(*args)
        except OverflowError:
            return slow(*args)

    call.__name__ = name
    call.__doc__ = slow.__doc__
    return call


mul = _dispatch("mul")
div_exact = _dispatch("div_exact")
det_bareiss = _dispatch("det_bareiss")
sub = _pykernel.sub
