"""
Exact sparse/dense linear algebra over F_p
"""

from .fp import (
    RREF,
    EchelonForm,
    FpMatrix,
    FpSubspace,
    QuotientCoordinates,
    SparseVector,
    as_dense,
    as_sparse,
    image,
    intersect,
    kernel,
    quotient_basis,
    row_space,
    rref,
    solve,
)

__all__ = [
    "RREF",
    "EchelonForm",
    "FpMatrix",
    "FpSubspace",
    "QuotientCoordinates",
    "SparseVector",
    "as_dense",
    "as_sparse",
    "image",
    "intersect",
    "kernel",
    "quotient_basis",
    "row_space",
    "rref",
    "solve",
]
