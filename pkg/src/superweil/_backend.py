"""Kernel selection.

SUPERWEIL_BACKEND controls which term-map kernel the package binds at import:
  auto      compiled if importable, else pure (default)
  compiled  require the Cython extension, fail loudly if missing
  pure      force the Python fallback
"""

import os

from . import _kernel_py

_choice = os.environ.get("SUPERWEIL_BACKEND", "auto").strip().lower()

if _choice in ("auto", "compiled"):
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _choice == "compiled":
            raise ImportError(
                "SUPERWEIL_BACKEND=compiled but the superweil._kernel extension "
                "is not built; reinstall the package or use SUPERWEIL_BACKEND=pure"
            )
        _impl = _kernel_py
elif _choice == "pure":
    _impl = _kernel_py
else:
    raise ImportError(f"unknown SUPERWEIL_BACKEND value: {_choice!r}")

kernel = _impl

BACKEND = kernel.BACKEND_NAME

pack = kernel.pack
even_bits = kernel.even_bits
odd_bits = kernel.odd_bits
key_parity = kernel.key_parity
koszul_sign = kernel.koszul_sign
mul_into = kernel.mul_into
mul_terms = kernel.mul_terms
add_terms = kernel.add_terms
sub_terms = kernel.sub_terms
neg_terms = kernel.neg_terms
scale_terms = kernel.scale_terms
