"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_kernels`` module is used. Setting ``SUBSCHEME_CALC_PURE=1``
forces the fallback.
"""

import importlib
import os

from ._kernels import BLOCK, GREVLEX, LEX  # noqa: F401


def load_backend(name):
    """Import a kernel backend by name (``"cython"`` or ``"python"``)."""
    if name == "cython":
        return importlib.import_module("subscheme_calc._ckernels")
    if name == "python":
        return importlib.import_module("subscheme_calc._kernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def _select():
    if os.environ.get("SUBSCHEME_CALC_PURE", "") not in ("", "0"):
        return "python", load_backend("python")
    try:
        return "cython", load_backend("cython")
    except ImportError:
        return "python", load_backend("python")


BACKEND, _impl = _select()

sort_key = _impl.sort_key
leading_monomial = _impl.leading_monomial
add = _impl.add
mul = _impl.mul
mul_term = _impl.mul_term
normal_form = _impl.normal_form
integer_law_table = _impl.integer_law_table
