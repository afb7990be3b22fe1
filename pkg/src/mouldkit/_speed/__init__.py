# Backend selection for the term-dict kernels.
#
# The compiled extension is preferred when present; MOULDKIT_PURE=1 forces
# the pure-Python fallback (useful for benchmarking and for debugging the
# kernels themselves).  Everything downstream imports the functions from
# here and never notices which backend answered.
import os

if os.environ.get("MOULDKIT_PURE") == "1":
    from . import pure as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

compiled = _impl.compiled
backend_name = "compiled" if compiled else "pure"

add_terms = _impl.add_terms
sub_terms = _impl.sub_terms
scale_terms = _impl.scale_terms
mul_terms = _impl.mul_terms
concat_mul_terms = _impl.concat_mul_terms
