"""Backend selection for the enumeration kernels.

Prefers the compiled extension when it imported cleanly; set
QGDET_PURE_PYTHON=1 to force the fallback (used by the benchmark and to
exercise the pure path in tests).
"""

import os

if os.environ.get("QGDET_PURE_PYTHON"):
    from . import _slow as _impl

    BACKEND = "python"
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _slow as _impl

        BACKEND = "python"

count_spanning_subsets = _impl.count_spanning_subsets
canonical_forms = _impl.canonical_forms
