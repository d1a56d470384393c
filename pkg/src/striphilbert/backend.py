"""Kernel backend selection.

The hot numerical kernels exist twice: a Cython extension
(``striphilbert._kernels_c``) and a pure-Python/numpy fallback
(``striphilbert._kernels_py``) with identical signatures.  The compiled one
is preferred when it imported cleanly; set ``STRIPHILBERT_BACKEND=python``
or ``=compiled`` to force a choice (forcing ``compiled`` raises if the
extension is missing).
"""

from __future__ import annotations

import os

_requested = os.environ.get("STRIPHILBERT_BACKEND", "auto").strip().lower()

if _requested in {"auto", "", "compiled", "c"}:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _requested in {"compiled", "c"}:
            raise ImportError(
                "STRIPHILBERT_BACKEND=compiled but the extension module "
                "striphilbert._kernels_c is not built"
            )
        from . import _kernels_py as _impl

        BACKEND = "python"
elif _requested in {"python", "py", "pure"}:
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    raise ValueError(
        "unrecognised STRIPHILBERT_BACKEND=%r (use 'auto', 'compiled' or 'python')"
        % _requested
    )

theta3_sum = _impl.theta3_sum
theta3_excess_sum = _impl.theta3_excess_sum
beta_kernel_series = _impl.beta_kernel_series
beta_line2_sum = _impl.beta_line2_sum
beta_half_raw_sum = _impl.beta_half_raw_sum
beta_half_lambert_sum = _impl.beta_half_lambert_sum
limit_partial_sum = _impl.limit_partial_sum
synthesize_value = _impl.synthesize_value
synthesize_many = _impl.synthesize_many
analyze_coeffs = _impl.analyze_coeffs
pv_apply = _impl.pv_apply
