"""Selects the row-reduction backend.

The compiled extension is used when importable; otherwise the pure-Python
twin takes over.  Set ``ARRPOIN_PURE=1`` to force the fallback (useful for
benchmarking and for debugging the kernels against each other).
"""

import os

if os.environ.get("ARRPOIN_PURE") == "1":
    from . import _rowred_py as _impl
else:
    try:
        from . import _rowred as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _rowred_py as _impl

RowBasis = _impl.RowBasis
make_primitive = _impl.make_primitive
BACKEND = _impl.BACKEND
