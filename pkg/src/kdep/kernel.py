"""Backend selection for the rank kernels.

Prefers the compiled extension, falls back to the pure-Python module when the
extension is missing, and honours KDEP_PURE=1 to force the fallback (useful
for benchmarking and cross-checking the two implementations).
"""

from __future__ import annotations

import os

if os.environ.get("KDEP_PURE"):
    from . import _pykernel as _impl

    BACKEND = "pure"
else:
    try:
        from . import _ckernel as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernel as _impl

        BACKEND = "pure"

rank = _impl.rank
count_dependent = _impl.count_dependent


def backend_name() -> str:
    return BACKEND
