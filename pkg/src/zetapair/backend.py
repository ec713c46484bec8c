"""Kernel backend selection.

The compiled extension is used when it importable; setting ZETAPAIR_NO_EXT=1
forces the numpy fallback (useful for the benchmark and for debugging).
"""

from __future__ import annotations

import os

if os.environ.get("ZETAPAIR_NO_EXT"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = kernels.BACKEND

pair_sum_exact = kernels.pair_sum_exact
pair_sum_window = kernels.pair_sum_window
z_rs_group = kernels.z_rs_group
z_em_batch = kernels.z_em_batch
