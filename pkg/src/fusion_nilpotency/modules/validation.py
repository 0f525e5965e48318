"""
F-invariance and fusion compatibility of modules.

A module is F-invariant when phi(x).m = x.m for every F-morphism phi: P -> S,
x in P, m in M; equivalently foc(F) acts trivially. Fusion compatibility asks
the same only for F-centric P, which is exactly what makes phi* a cochain
map in the stable-element computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from ..errors import InternalConsistencyError, SubgroupError
from ..fusion.system import FusionSystem, centric_members, focal_subgroup, hom_set
from .fpmodule import FpModule


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


def _require_sylow_action(M: FpModule, F: FusionSystem) -> None:
    if M.acting_group != F.S:
        raise SubgroupError("the module must be a module for the Sylow subgroup of F")


def invariant_by_definition(M: FpModule, F: FusionSystem) -> CheckResult:
    """Quantifier form: every P, phi in Hom_F(P,S), generator x of P"""
    _require_sylow_action(M, F)
    for P in F.subgroups:
        for phi in hom_set(F, P, F.S):
            for x in P.canonical_generators:
                if not np.array_equal(M.matrix(phi(x)), M.matrix(x)):
                    return CheckResult(False, (P, phi, x))
    return CheckResult(True)


def invariant_by_focal_subgroup(M: FpModule, F: FusionSystem) -> CheckResult:
    """foc(F) acts trivially; witness is (x in foc, first column moved by x)"""
    _require_sylow_action(M, F)
    identity = np.eye(M.dim, dtype=np.int64)
    for x in focal_subgroup(F).members:
        matrix = M.matrix(x)
        if not np.array_equal(matrix, identity):
            column = int(np.flatnonzero(np.any(matrix != identity, axis=0))[0])
            return CheckResult(False, (x, column))
    return CheckResult(True)


def is_F_invariant(M: FpModule, F: FusionSystem) -> CheckResult:
    """Both characterizations, which must agree; returns the focal form"""
    direct = invariant_by_definition(M, F)
    focal = invariant_by_focal_subgroup(M, F)
    if direct.ok != focal.ok:
        raise InternalConsistencyError(
            f"F-invariance characterizations disagree for {M.name}: "
            f"definition={direct.ok}, focal={focal.ok}"
        )
    return focal


def is_fusion_compatible(M: FpModule, F: FusionSystem) -> CheckResult:
    """action(phi(x)) = action(x) for F-centric P, phi in Hom_F(P,S), x in P"""
    _require_sylow_action(M, F)
    for P in centric_members(F):
        for phi in hom_set(F, P, F.S):
            if phi.is_inclusion():
                continue
            for x, y in zip(P.members, phi.images):
                if not np.array_equal(M.matrix(y), M.matrix(x)):
                    return CheckResult(False, (P, phi, x))
    return CheckResult(True)
