"""Pick the compiled WENO kernel when it is importable.

Set ``RIEMANN_LIMITS_PURE_PYTHON=1`` to force the NumPy kernel.
"""

import os

from . import _kernel_py

python_rhs = _kernel_py.flux_split_rhs

try:
    from ._kernel import flux_split_rhs as compiled_rhs
except ImportError:  # extension not built
    compiled_rhs = None

if compiled_rhs is not None and os.environ.get("RIEMANN_LIMITS_PURE_PYTHON", "") != "1":
    flux_split_rhs = compiled_rhs
    BACKEND = "cython"
else:
    flux_split_rhs = python_rhs
    BACKEND = "python"
