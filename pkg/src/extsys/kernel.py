"""Selects the compiled enumeration kernel when available.

Set EXTSYS_PURE_PYTHON=1 to force the fallback.
"""
import os

from . import _kernel_py

BACKEND = "python"
enumerate_tuples = _kernel_py.enumerate_tuples

if os.environ.get("EXTSYS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._kernel import enumerate_tuples  # noqa: F811
    except ImportError:
        pass
    else:
        BACKEND = "cython"
