"""Backend selection for the summation kernels.

Imports the compiled extension ``dedezeta._speedups`` when it is
available and falls back to the pure-Python twin ``_purekernels``
otherwise. Setting the environment variable ``DEDEZETA_BACKEND=python``
forces the fallback; ``DEDEZETA_BACKEND=cython`` demands the extension
and raises if it cannot be imported.

Both backends implement the same operation sequences and accumulate in
the same order, so computed values are bit-identical; the choice only
affects speed. ``BACKEND`` names the active implementation.
"""

from __future__ import annotations

import os

_choice = os.environ.get("DEDEZETA_BACKEND", "").strip().lower()

if _choice == "python":
    from . import _purekernels as _impl

    BACKEND = "python"
elif _choice == "cython":
    from . import _speedups as _impl  # type: ignore[attr-defined]

    BACKEND = "cython"
elif _choice == "":
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _purekernels as _impl

        BACKEND = "python"
else:
    raise RuntimeError(
        f"DEDEZETA_BACKEND={_choice!r} not recognized; use 'python' or 'cython'"
    )

b1_pair_numer = _impl.b1_pair_numer
line_zeta_sum = _impl.line_zeta_sum
plane_zeta_sum = _impl.plane_zeta_sum
orthant_plane_sum = _impl.orthant_plane_sum
combined_y_r2 = _impl.combined_y_r2
cone_grid_sum = _impl.cone_grid_sum
ray_grid_sum = _impl.ray_grid_sum
fan_probe_r2 = _impl.fan_probe_r2

__all__ = [
    "BACKEND",
    "b1_pair_numer",
    "combined_y_r2",
    "cone_grid_sum",
    "fan_probe_r2",
    "line_zeta_sum",
    "orthant_plane_sum",
    "plane_zeta_sum",
    "ray_grid_sum",
]
