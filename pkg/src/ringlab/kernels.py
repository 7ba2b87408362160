"""Kernel backend selection.

Prefers the compiled extension; falls back to the pure-Python twin when the
extension is missing or when RINGLAB_PURE is set to a non-empty value other
than "0".  Both backends expose the same five functions with identical
outputs; `benchmarks/bench_kernels.py` compares their speed.
"""

import os

if os.environ.get("RINGLAB_PURE", "0").strip() not in ("", "0"):
    from ringlab import _kernels_py as _impl
else:
    try:
        from ringlab import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from ringlab import _kernels_py as _impl

BACKEND = _impl.BACKEND
axiom_violations = _impl.axiom_violations
find_partner = _impl.find_partner
annihilator_masks = _impl.annihilator_masks
subgroup_sum = _impl.subgroup_sum
cofactor_search = _impl.cofactor_search
