"""Kernel backend selection.

The compiled extension is preferred when present; set REFLECTPATH_PURE_KERNEL=1
to force the pure-Python implementation (used by tests and the benchmark).
"""

import os

if os.environ.get("REFLECTPATH_PURE_KERNEL") == "1":
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

orient = _impl.orient
cmp_q = _impl.cmp_q
backend_name = _impl.backend_name
