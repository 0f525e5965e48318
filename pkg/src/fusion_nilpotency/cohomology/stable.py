"""
Restriction, phi* and stable elements.

H^n(F^c; M) is the subspace of H^n(S; M) on which res_P and phi* agree for
every F-centric P and every phi in Hom_F(P,S). All (res - phi*) blocks are
stacked into one matrix whose kernel is the stable subspace.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np
import structlog

from ..config import COHOMOLOGY_CONFIG, DEFAULT_LIMITS, Limits
from ..errors import IncompatibleModuleError, InternalConsistencyError, NotSubspaceError
from ..fusion.system import FusionSystem, centric_members, hom_set
from ..groups.core import GroupHom, Subgroup
from ..linalg.fp import FpMatrix, FpSubspace, SparseVector, kernel
from ..modules.fpmodule import FpModule, restrict_module
from ..modules.validation import is_fusion_compatible
from .bar import CochainComplex, build_cochain_complex
from .spaces import CohomologySpace, cohomology, cohomology_from_complex

logger = structlog.get_logger(__name__)


def _class_matrix(
    H_source: CohomologySpace, target: CohomologySpace, pulled: Sequence[SparseVector]
) -> FpMatrix:
    """Matrix whose column j holds the target coordinates of pulled[j]"""
    rows: list[SparseVector] = [{} for _ in range(target.dim)]
    for j, cochain in enumerate(pulled):
        try:
            coords = target.coordinates(cochain)
        except NotSubspaceError as exc:
            raise InternalConsistencyError(
                f"pulled-back class {j} of degree {H_source.degree} is not a cocycle"
            ) from exc
        for i, c in enumerate(coords):
            if c:
                rows[i][j] = c
    return FpMatrix.from_rows(H_source.complex.p, target.dim, H_source.dim, rows)


def _check_map_compatible(M: FpModule, phi: GroupHom) -> None:
    for x, y in zip(phi.domain.members, phi.images):
        if not np.array_equal(M.matrix(x), M.matrix(y)):
            raise IncompatibleModuleError(
                f"phi* is not a cochain map: {x} and its image {y} act differently",
                witness=(phi.domain, phi, x),
            )


def _target_space(H_S: CohomologySpace, P: Subgroup, limits: Limits) -> CohomologySpace:
    return cohomology(P, restrict_module(H_S.module, P), H_S.degree, limits)


def restriction_map(
    H_S: CohomologySpace,
    P: Subgroup,
    target: CohomologySpace | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> FpMatrix:
    """res: H^n(S;M) -> H^n(P;M) in the chosen class bases"""
    if not P.is_subgroup_of(H_S.group):
        raise NotSubspaceError("restriction target is not a subgroup of the source")
    target = target or _target_space(H_S, P, limits)
    source = H_S.complex
    pulled = [
        target.complex.pull_back(z, source, H_S.degree, lambda x: x) for z in H_S.basis
    ]
    return _class_matrix(H_S, target, pulled)


def phi_star(
    H_S: CohomologySpace,
    phi: GroupHom,
    target: CohomologySpace | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> FpMatrix:
    """phi*: H^n(S;M) -> H^n(P;M) for phi: P -> S, via (phi*c)(x..) = c(phi x..)"""
    _check_map_compatible(H_S.module, phi)
    target = target or _target_space(H_S, phi.domain, limits)
    source = H_S.complex
    pulled = [target.complex.pull_back(z, source, H_S.degree, phi) for z in H_S.basis]
    return _class_matrix(H_S, target, pulled)


class StableElementCalculator:
    """
    Stable elements of one module for one fusion system.

    Keeps a cochain complex per subgroup and every computed cohomology
    space, so scanning several degrees shares the work.
    """

    def __init__(
        self,
        F: FusionSystem,
        M: FpModule,
        n_max: int | None = None,
        limits: Limits = DEFAULT_LIMITS,
    ):
        compatible = is_fusion_compatible(M, F)
        if not compatible:
            raise IncompatibleModuleError(
                f"module {M.name} is not fusion compatible", witness=compatible.witness
            )
        self.F = F
        self.M = M
        self.n_max = COHOMOLOGY_CONFIG["n_max"] if n_max is None else n_max
        self.limits = limits
        self._complexes: dict[Subgroup, CochainComplex] = {}
        self._spaces: dict[tuple[Subgroup, int], CohomologySpace] = {}

    def complex_for(self, P: Subgroup) -> CochainComplex:
        if P not in self._complexes:
            self._complexes[P] = build_cochain_complex(
                P, restrict_module(self.M, P), self.n_max, self.limits
            )
        return self._complexes[P]

    def space(self, P: Subgroup, n: int) -> CohomologySpace:
        if n > self.n_max:
            raise ValueError(f"degree {n} above the calculator's n_max={self.n_max}")
        key = (P, n)
        if key not in self._spaces:
            self._spaces[key] = cohomology_from_complex(self.complex_for(P), n)
        return self._spaces[key]

    def ambient(self, n: int) -> CohomologySpace:
        """H^n(S;M)"""
        return self.space(self.F.S, n)

    def restriction_map(self, P: Subgroup, n: int) -> FpMatrix:
        return restriction_map(self.ambient(n), P, self.space(P, n))

    def phi_star(self, phi: GroupHom, n: int) -> FpMatrix:
        return phi_star(self.ambient(n), phi, self.space(phi.domain, n))

    def stable(self, n: int, subgroups: Iterable[Subgroup]) -> FpSubspace:
        H_S = self.ambient(n)
        blocks = []
        for P in subgroups:
            morphisms = [
                phi for phi in hom_set(self.F, P, self.F.S) if not phi.is_inclusion()
            ]
            if not morphisms or H_S.dim == 0:
                continue
            res = self.restriction_map(P, n)
            for phi in morphisms:
                blocks.append(res - self.phi_star(phi, n))
        if not blocks:
            return FpSubspace.full(self.M.p, H_S.dim)
        stacked = FpMatrix.vstack(self.M.p, H_S.dim, blocks)
        result = kernel(stacked)
        logger.debug(
            "stable elements",
            degree=n,
            ambient=H_S.dim,
            stable=result.dim,
            constraints=stacked.rows,
        )
        return result

    def stable_elements(self, n: int) -> FpSubspace:
        return self.stable(n, centric_members(self.F))

    def stable_elements_all_subgroups(self, n: int) -> FpSubspace:
        return self.stable(n, self.F.subgroups)


def stable_elements(
    F: FusionSystem, M: FpModule, n: int, limits: Limits = DEFAULT_LIMITS
) -> FpSubspace:
    """H^n(F^c; M) as a subspace of the class space of H^n(S; M)"""
    return StableElementCalculator(F, M, n, limits).stable_elements(n)


def stable_elements_all_subgroups(
    F: FusionSystem, M: FpModule, n: int, limits: Limits = DEFAULT_LIMITS
) -> FpSubspace:
    """H^n(F; M): stability over every P <= S"""
    return StableElementCalculator(F, M, n, limits).stable_elements_all_subgroups(n)
