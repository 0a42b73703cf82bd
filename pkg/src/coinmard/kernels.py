"""Kernel selection: compiled extension if built, pure Python otherwise.

Set COINMARD_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the kernel-agreement tests).
"""

import os

from . import _gram_py

if os.environ.get("COINMARD_PURE_PYTHON"):
    _impl = _gram_py
else:
    try:
        from . import _gram as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _gram_py

first_violation = _impl.first_violation
KERNEL = "compiled" if _impl is not _gram_py else "python"
