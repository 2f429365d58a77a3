"""Backend selection: numba-compiled kernels with a pure-numpy fallback.

The compiled backend is used whenever numba imports successfully.  Setting
the environment variable ``GROWTHCERT_DISABLE_NUMBA`` to ``1``, ``true``,
``yes`` or ``on`` (case-insensitive) forces the numpy fallback.  Selection
happens once at import time; both kernel modules implement the same
algorithms with identical per-element arithmetic.
"""

from __future__ import annotations

import os

ENV_FLAG = "GROWTHCERT_DISABLE_NUMBA"


def _disabled_by_env() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}


try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    HAVE_NUMBA = False

BACKEND: str = "numpy" if (_disabled_by_env() or not HAVE_NUMBA) else "numba"
