"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Setting ``TENSILE_DOMAIN_PURE_PYTHON=1`` forces the
fallback.
"""

import os

from . import _kernels_py

if os.environ.get("TENSILE_DOMAIN_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
mr_stress = _impl.mr_stress
mr_width = _impl.mr_width
mr_point = _impl.mr_point
mr_grid = _impl.mr_grid

TENSE = _kernels_py.TENSE
WRINKLED_1 = _kernels_py.WRINKLED_1
WRINKLED_2 = _kernels_py.WRINKLED_2
SLACK = _kernels_py.SLACK
FLAG_BOUNDARY = _kernels_py.FLAG_BOUNDARY
FLAG_NO_WIDTH = _kernels_py.FLAG_NO_WIDTH
FLAG_UNIAXIAL = _kernels_py.FLAG_UNIAXIAL
