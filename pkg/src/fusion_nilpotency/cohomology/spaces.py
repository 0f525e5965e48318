"""
Cohomology groups H^n(P; M) = cocycles / coboundaries with explicit bases
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from ..config import DEFAULT_LIMITS, Limits
from ..errors import SubgroupError
from ..groups.core import Group, Subgroup
from ..linalg.fp import (
    FpSubspace,
    QuotientCoordinates,
    SparseVector,
    image,
    kernel,
    quotient_basis,
)
from ..modules.fpmodule import FpModule
from .bar import CochainComplex, build_cochain_complex


@dataclass(frozen=True, eq=False)
class CohomologySpace:
    degree: int
    complex: CochainComplex
    cocycles: FpSubspace
    coboundaries: FpSubspace
    basis: tuple[SparseVector, ...]
    _coordinates: QuotientCoordinates

    @property
    def ambient_dim(self) -> int:
        return self.cocycles.ambient_dim

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def group(self) -> Subgroup:
        return self.complex.group

    @property
    def module(self) -> FpModule:
        return self.complex.module

    def coordinates(self, cocycle: Mapping[int, int]) -> list[int]:
        """Class of a cocycle in the basis of representatives"""
        return self._coordinates.coordinates(cocycle)

    def __repr__(self) -> str:
        return (
            f"CohomologySpace(n={self.degree}, dim={self.dim}, "
            f"|P|={self.group.order}, module={self.module.name!r})"
        )


def cohomology_from_complex(C: CochainComplex, n: int) -> CohomologySpace:
    if n > C.n_max:
        raise ValueError(f"complex only built up to degree {C.n_max}, asked for {n}")
    Z = kernel(C.differentials[n])
    if n == 0:
        B = FpSubspace.zero(C.p, C.cochain_dims[0])
    else:
        B = image(C.differentials[n - 1])
    reps = quotient_basis(Z, B)
    coords = QuotientCoordinates(C.p, C.cochain_dims[n], B.vectors(), reps)
    return CohomologySpace(n, C, Z, B, tuple(reps), coords)


def cohomology(
    P: Subgroup, M: FpModule, n: int, limits: Limits = DEFAULT_LIMITS
) -> CohomologySpace:
    """
    H^n(P; M) from the normalized bar complex.

    Args:
        P: A subgroup of M's acting group
        M: Coefficients
        n: Degree
        limits: Memory budget

    Returns:
        CohomologySpace with cocycle representatives; H^0 is M^P
    """
    if not P.is_subgroup_of(M.acting_group):
        raise SubgroupError("the module does not act on this subgroup")
    return cohomology_from_complex(build_cochain_complex(P, M, n, limits), n)


def group_cohomology_direct(
    G: Group | Subgroup, M: FpModule, n: int, limits: Limits = DEFAULT_LIMITS
) -> CohomologySpace:
    """H^n(G; M) over the whole group, as an independent oracle"""
    whole = G.whole() if isinstance(G, Group) else G
    if M.acting_group != whole:
        raise SubgroupError("the module must be a module for the whole group")
    return cohomology(whole, M, n, limits)
