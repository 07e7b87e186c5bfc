"""Elimination kernel selection.

Prefers the compiled Cython kernel; falls back to the numpy/Python
implementation when the extension was not built.  BACKEND records which
one is active (used by benchmarks and reported by dgmc.__init__).
"""

try:
    from ._modp import rref_mod

    BACKEND = "cython"
except ImportError:  # extension not built
    from .modp_fallback import rref_mod

    BACKEND = "python"

__all__ = ["rref_mod", "BACKEND"]
