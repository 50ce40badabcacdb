"""Kernel selection: compiled extension when available, else pure Python.

Set ``SENTIBOARD_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and the twin-parity tests).
"""

from __future__ import annotations

import os

if os.environ.get("SENTIBOARD_PURE_PYTHON"):
    from ._intensity_py import KERNEL_NAME, mean_polarity, raw_intensity
else:
    try:
        from ._intensity_cy import KERNEL_NAME, mean_polarity, raw_intensity  # type: ignore[no-redef]
    except ImportError:
        from ._intensity_py import KERNEL_NAME, mean_polarity, raw_intensity  # type: ignore[no-redef]

__all__ = ["KERNEL_NAME", "raw_intensity", "mean_polarity"]
