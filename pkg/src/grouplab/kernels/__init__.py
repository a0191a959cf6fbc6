"""Hot inner loops (subgroup closure, conjugation orbits, product sets).

The compiled Cython backend is used when it was built; otherwise the pure
Python implementation is selected.  Set ``GROUPLAB_PURE_PYTHON=1`` to force
the fallback.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("GROUPLAB_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend

BACKEND = backend.BACKEND
prepare_table = backend.prepare_table
closure = backend.closure
conjugation_orbits = backend.conjugation_orbits
product_mask = backend.product_mask
element_orders = backend.element_orders

__all__ = [
    "BACKEND", "backend", "python_backend", "compiled_backend",
    "prepare_table", "closure", "conjugation_orbits", "product_mask", "element_orders",
]
