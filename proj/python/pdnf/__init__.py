"""Parametric Poincare-Dulac normal forms with exact rational arithmetic.

Scalars are exchanged as strings such as ``"-1/4"`` or ``"1/2+3i"``.
"""

from ._pdnf import (
    NormalForm,
    SpecError,
    System,
    coefficient_at,
    normalize,
    normalize_targets,
    verify,
)

__all__ = [
    "NormalForm",
    "SpecError",
    "System",
    "coefficient_at",
    "normalize",
    "normalize_targets",
    "verify",
]
