"""Backend selection for the exact linear algebra kernels.

The compiled Cython kernel is preferred; set QCAP_PURE_PYTHON=1 to force
the pure-Python twin (same results, bit for bit).  `BACKEND` reports
which one is active.
"""

import os

if os.environ.get("QCAP_PURE_PYTHON") == "1":
    from qcap import _linalg_py as _impl
else:
    try:
        from qcap import _linalg_cy as _impl
    except ImportError:
        from qcap import _linalg_py as _impl

BACKEND = _impl.BACKEND
rref = _impl.rref
rank = _impl.rank
solve = _impl.solve
inv = _impl.inv
nullspace = _impl.nullspace
