"""
Finite-dimensional F_p-representations of a finite group.

Matrices act on column vectors from the left: action(xy) = action(x) action(y).
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from itertools import product

import numpy as np
import structlog

from ..errors import ModuleValidationError, SubgroupError
from ..groups.core import GroupHom, Subgroup, quotient_group
from ..linalg.fp import FpMatrix, FpSubspace, kernel

logger = structlog.get_logger(__name__)


def _frozen(matrix: np.ndarray) -> np.ndarray:
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True, eq=False)
class FpModule:
    """
    An F_p[H]-module of dimension `dim` for H = `acting_group`.

    `action` holds a d x d matrix for every element of H; construction
    verifies the homomorphism property exhaustively.
    """

    p: int
    dim: int
    acting_group: Subgroup
    action: Mapping[int, np.ndarray]
    name: str = "M"

    @classmethod
    def from_action(
        cls,
        acting_group: Subgroup,
        p: int,
        action: Mapping[int, Sequence[Sequence[int]] | np.ndarray],
        name: str = "M",
        verify: bool = True,
    ) -> FpModule:
        if set(action) != acting_group.member_set:
            raise ModuleValidationError("action must be given on every group element")
        matrices = {x: _frozen(np.mod(np.asarray(action[x], dtype=np.int64), p)) for x in acting_group.members}
        dims = {m.shape for m in matrices.values()}
        if len(dims) != 1:
            raise ModuleValidationError(f"action matrices have differing shapes {sorted(dims)}")
        (rows, cols), = dims
        if rows != cols:
            raise ModuleValidationError(f"action matrices are not square: {rows}x{cols}")
        module = cls(p, rows, acting_group, matrices, name)
        if verify:
            module.verify()
        return module

    @classmethod
    def from_generators(
        cls,
        acting_group: Subgroup,
        p: int,
        generators: Sequence[int],
        matrices: Sequence[Sequence[Sequence[int]] | np.ndarray],
        name: str = "M",
        dim: int | None = None,
    ) -> FpModule:
        """Extend generator matrices multiplicatively and validate

        `dim` fixes the dimension when there are no generators (trivial
        acting group) and is checked against the matrices otherwise.
        """
        if len(generators) != len(matrices):
            raise ModuleValidationError(
                f"{len(generators)} generators but {len(matrices)} matrices"
            )
        group = acting_group.parent
        gen_mats = [np.mod(np.asarray(m, dtype=np.int64), p) for m in matrices]
        shapes = {m.shape for m in gen_mats}
        if len(shapes) > 1:
            raise ModuleValidationError(f"generator matrices have differing shapes {sorted(shapes)}")
        d = gen_mats[0].shape[0] if gen_mats else (dim if dim is not None else 1)
        if dim is not None and d != dim:
            raise ModuleValidationError(f"matrices are {d}x{d}, expected dimension {dim}")
        if d < 1:
            raise ModuleValidationError("module dimension must be positive")
        action: dict[int, np.ndarray] = {group.identity: np.eye(d, dtype=np.int64)}
        frontier = [group.identity]
        while frontier:
            step = []
            for x in frontier:
                for g, mat in zip(generators, gen_mats):
                    y = group.mult[x][g]
                    value = (action[x] @ mat) % p
                    if y not in action:
                        action[y] = value
                        step.append(y)
                    elif not np.array_equal(action[y], value):
                        raise ModuleValidationError(
                            f"generator matrices violate a relation at element {y}"
                        )
            frontier = step
        if set(action) != acting_group.member_set:
            raise ModuleValidationError("generators do not generate the acting group")
        return cls.from_action(acting_group, p, action, name)

    def matrix(self, x: int) -> np.ndarray:
        return self.action[x]

    def verify(self) -> None:
        """Raise ModuleValidationError unless the action is a representation"""
        group = self.acting_group.parent
        identity = np.eye(self.dim, dtype=np.int64)
        if not np.array_equal(self.action[group.identity], identity):
            raise ModuleValidationError("identity does not act as the identity matrix")
        for x in self.acting_group.members:
            ax = self.action[x]
            for y in self.acting_group.members:
                if not np.array_equal(self.action[group.mult[x][y]], (ax @ self.action[y]) % self.p):
                    raise ModuleValidationError(
                        f"action is not multiplicative at ({group.describe(x)}, {group.describe(y)})"
                    )

    @property
    def is_trivial(self) -> bool:
        identity = np.eye(self.dim, dtype=np.int64)
        return all(np.array_equal(m, identity) for m in self.action.values())

    def acts_trivially(self, x: int) -> bool:
        return np.array_equal(self.action[x], np.eye(self.dim, dtype=np.int64))

    def fixed_points(self) -> FpSubspace:
        """M^H, the common kernel of action(g) - 1 over generators g"""
        gens = self.acting_group.canonical_generators
        if not gens:
            return FpSubspace.full(self.p, self.dim)
        identity = np.eye(self.dim, dtype=np.int64)
        stacked = np.vstack([(self.action[g] - identity) % self.p for g in gens])
        return kernel(FpMatrix.from_dense(self.p, stacked))

    def signature(self) -> tuple:
        """Hashable description of the action, for deduplication"""
        return (
            self.p,
            self.dim,
            self.acting_group.members,
            tuple(self.action[x].tobytes() for x in self.acting_group.members),
        )

    def __repr__(self) -> str:
        return f"FpModule({self.name!r}, p={self.p}, dim={self.dim}, |H|={self.acting_group.order})"


def trivial_module(S: Subgroup, p: int, d: int = 1) -> FpModule:
    identity = np.eye(d, dtype=np.int64)
    name = f"F_{p}" if d == 1 else f"F_{p}^{d}"
    return FpModule.from_action(S, p, {x: identity for x in S.members}, name, verify=False)


def regular_module(H: Subgroup, p: int, name: str | None = None) -> FpModule:
    """F_p[H] with H acting by left multiplication on the basis H.members"""
    group = H.parent
    n = H.order
    action = {}
    for s in H.members:
        matrix = np.zeros((n, n), dtype=np.int64)
        for c_index, c in enumerate(H.members):
            matrix[H.position[group.mult[s][c]], c_index] = 1
        action[s] = matrix
    return FpModule.from_action(H, p, action, name or f"F_{p}[{group.name}]", verify=False)


def pullback_module(M: FpModule, f: GroupHom, name: str | None = None) -> FpModule:
    """Module on f.domain with x acting as f(x) does on M (inflation along f)"""
    if f.codomain.parent is not M.acting_group.parent or not all(
        y in M.acting_group.member_set for y in f.images
    ):
        raise SubgroupError("homomorphism does not land in the acting group")
    action = {x: M.action[f(x)] for x in f.domain.members}
    return FpModule.from_action(f.domain, M.p, action, name or M.name)


def restrict_module(M: FpModule, P: Subgroup) -> FpModule:
    if not P.is_subgroup_of(M.acting_group):
        raise SubgroupError("restriction target is not a subgroup of the acting group")
    action = {x: M.action[x] for x in P.members}
    return FpModule.from_action(P, M.p, action, M.name, verify=False)


def regular_quotient_module(S: Subgroup, K: Subgroup, p: int, name: str | None = None) -> FpModule:
    """F_p[S/K], S acting through left multiplication on cosets"""
    quotient, projection = quotient_group(S, K)
    regular = regular_module(quotient.whole(), p)
    return pullback_module(regular, projection, name or f"F_{p}[S/K{K.order}]")


def one_dimensional_modules(S: Subgroup, K: Subgroup, p: int) -> list[FpModule]:
    """Every character S/K -> F_p^x as a 1-dimensional module on S"""
    quotient, projection = quotient_group(S, K)
    Q = quotient.whole()
    gens = Q.canonical_generators
    modules = []
    for values in product(range(1, p), repeat=len(gens)):
        try:
            character = FpModule.from_generators(
                Q, p, gens, [[[v]] for v in values], name=f"chi{list(values)}"
            )
        except ModuleValidationError:
            continue
        modules.append(pullback_module(character, projection))
    logger.debug("enumerated characters", quotient_order=quotient.order, count=len(modules))
    return modules
