"""Kernel backend selection.

Imports the compiled kernels when the extension module was built, the
pure-Python fallback otherwise. Setting EUCLID_KIT_PURE=1 forces the
fallback (useful for debugging and for benchmarking both backends).
"""

import os

if os.environ.get("EUCLID_KIT_PURE"):
    from euclid_kit import _purepy as _impl

    BACKEND = "pure"
else:
    try:
        from euclid_kit import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from euclid_kit import _purepy as _impl  # type: ignore[no-redef]

        BACKEND = "pure"

gcd_divide = _impl.gcd_divide
gcd_subtract = _impl.gcd_subtract
ext_gcd = _impl.ext_gcd
cf_quotients = _impl.cf_quotients
convergent_pairs = _impl.convergent_pairs
box_solutions = _impl.box_solutions
