"""Enumeration kernels: compiled extension if built, pure Python otherwise.

The import-time choice is recorded in BACKEND ("compiled" or "pure").
Callers pass the truth table as packed little-endian bytes and the
probabilities as a flat double buffer (array('d') or equivalent).
"""

try:
    from ._fast import minimal_true_points, weighted_true_sum

    BACKEND = "compiled"
except ImportError:  # extension not built
    from .pure import minimal_true_points, weighted_true_sum

    BACKEND = "pure"

__all__ = ["weighted_true_sum", "minimal_true_points", "BACKEND"]
