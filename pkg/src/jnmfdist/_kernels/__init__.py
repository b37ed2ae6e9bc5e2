"""Hot-kernel backend selection.

The multiplicative-update sweep and the Chamfer nearest-neighbour scan
dominate runtime, so they exist twice: a Cython extension (``_native``) and a
numpy fallback. The compiled module is preferred when importable; set
``JNMFDIST_BACKEND=python`` to force the fallback or ``=native`` to fail loudly
if the extension is missing. ``benchmarks/bench_kernels.py`` compares the two.
"""

import os

from . import fallback

_choice = os.environ.get("JNMFDIST_BACKEND", "auto").strip().lower() or "auto"

if _choice in ("auto", "native"):
    try:
        from . import _native as _impl

        BACKEND = "native"
    except ImportError:
        if _choice == "native":
            raise
        _impl = fallback
        BACKEND = "python"
elif _choice in ("python", "fallback"):
    _impl = fallback
    BACKEND = "python"
else:
    raise ValueError(f"JNMFDIST_BACKEND must be 'auto', 'native' or 'python', got {_choice!r}")

mu_step = _impl.mu_step
frobenius_objective = _impl.frobenius_objective
chamfer_terms = _impl.chamfer_terms
