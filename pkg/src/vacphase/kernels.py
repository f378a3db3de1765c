"""Select the numerical backend: compiled extension or NumPy fallback.

The compiled ``vacphase._kernels`` extension is preferred when importable.
Setting the environment variable ``VACPHASE_PURE_PYTHON`` to anything other
than ``""`` or ``"0"`` forces the NumPy fallback, which is useful for
benchmarking the two backends against each other and for debugging.
"""

import os

from . import _kernels_py

USING_COMPILED = False
_impl = _kernels_py

if os.environ.get("VACPHASE_PURE_PYTHON", "0") in ("", "0"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        USING_COMPILED = True

line_sum = _impl.line_sum
fan_excess = _impl.fan_excess
transport_frame = _impl.transport_frame

BACKEND = "compiled" if USING_COMPILED else "python"
