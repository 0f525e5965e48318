"""
The fusion system F_S(G) of a finite group at a prime.

Hom-sets are enumerated by brute force over all conjugating elements and
cached eagerly at build time, so a built FusionSystem is never mutated.

F-centric subgroups follow the standard background definition: P <= S is
F-centric when C_S(Q) <= Q (equivalently C_S(Q) = Z(Q)) for every Q that is
F-conjugate to P.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

import structlog

from ..config import DEFAULT_LIMITS, Limits
from ..errors import GroupInputError, SubgroupError
from ..groups.core import (
    Group,
    GroupHom,
    Subgroup,
    all_subgroups,
    centralizer,
    derived_subgroup,
    group_from_generators,
    is_prime,
    o_p_residual,
    sylow_subgroup,
)

logger = structlog.get_logger(__name__)


def _conjugation_homs(
    group: Group, conjugators: Iterable[int], P: Subgroup, S: Subgroup
) -> tuple[GroupHom, ...]:
    """Distinct maps c_g|P with gPg^-1 <= S, in order of first conjugator"""
    seen: dict[tuple[int, ...], GroupHom] = {}
    for g in conjugators:
        images = tuple(group.conj(g, x) for x in P.members)
        if images in seen or not all(y in S.member_set for y in images):
            continue
        seen[images] = GroupHom(P, S, images)
    return tuple(seen.values())


@dataclass(frozen=True)
class FCentricFlag:
    """Centricity of one F-conjugacy class"""

    members: tuple[Subgroup, ...]
    centric: bool
    # (conjugate Q, element of C_S(Q) outside Q) for non-centric classes
    witness: tuple[Subgroup, int] | None = None

    @property
    def representative(self) -> Subgroup:
        return self.members[0]


@dataclass(frozen=True)
class NilpotencyCertificate:
    nilpotent: bool
    # (P, phi) with phi in Hom_F(P,S) not realized by conjugation in S
    witness: tuple[Subgroup, GroupHom] | None = None


@dataclass(frozen=True, eq=False)
class FusionSystem:
    """F = F_S(G) with every Hom_F(P,S) precomputed"""

    group: Group
    p: int
    S: Subgroup
    subgroups: tuple[Subgroup, ...]
    hom_cache: Mapping[Subgroup, tuple[GroupHom, ...]]
    sylow_hom_cache: Mapping[Subgroup, tuple[GroupHom, ...]]

    def _check_in_sylow(self, P: Subgroup) -> None:
        if P.parent is not self.group or not P.member_set <= self.S.member_set:
            raise SubgroupError(f"subgroup {P.label()} is not contained in S")

    def homs_to_sylow(self, P: Subgroup) -> tuple[GroupHom, ...]:
        self._check_in_sylow(P)
        return self.hom_cache[P]

    def automizer(self, P: Subgroup) -> Group:
        """Aut_F(P) as a permutation group on the positions of P's members"""
        perms = [
            tuple(P.position[y] for y in phi.images) for phi in hom_set(self, P, P)
        ]
        return group_from_generators(P.order, perms, name=f"Aut_F({P.label()})")

    def composition_closed(self) -> bool:
        """psi o phi lies in Hom_F(P,S) whenever phi: P -> Q and psi: Q -> S do"""
        for P in self.subgroups:
            known = {phi.images for phi in self.hom_cache[P]}
            for phi in self.hom_cache[P]:
                Q = phi.image()
                onto_q = phi.with_codomain(Q)
                for psi in self.hom_cache[Q]:
                    if psi.after(onto_q).images not in known:
                        return False
        return True

    def __repr__(self) -> str:
        return (
            f"FusionSystem(G={self.group.name}, p={self.p}, |S|={self.S.order}, "
            f"subgroups={len(self.subgroups)})"
        )


def build_fusion_system(G: Group, p: int, limits: Limits = DEFAULT_LIMITS) -> FusionSystem:
    """
    Build F_S(G) for S = sylow_subgroup(G, p).

    Args:
        G: The finite group
        p: The prime
        limits: Subgroup enumeration cap for S

    Returns:
        FusionSystem with Hom_F(P,S) and Hom_{F_S(S)}(P,S) cached for all P <= S
    """
    if not is_prime(p):
        raise GroupInputError(f"p must be prime, got {p}")
    S = sylow_subgroup(G, p)
    subgroups = tuple(all_subgroups(S, limits))
    hom_cache = {P: _conjugation_homs(G, G.elements, P, S) for P in subgroups}
    sylow_hom_cache = {P: _conjugation_homs(G, S.members, P, S) for P in subgroups}
    logger.info(
        "built fusion system",
        group=G.name,
        order=G.order,
        p=p,
        sylow_order=S.order,
        subgroups=len(subgroups),
        morphisms=sum(len(v) for v in hom_cache.values()),
    )
    return FusionSystem(G, p, S, subgroups, hom_cache, sylow_hom_cache)


def hom_set(F: FusionSystem, P: Subgroup, Q: Subgroup) -> list[GroupHom]:
    """Hom_F(P,Q) as maps P -> Q"""
    F._check_in_sylow(P)
    F._check_in_sylow(Q)
    return [
        phi.with_codomain(Q)
        for phi in F.hom_cache[P]
        if all(y in Q.member_set for y in phi.images)
    ]


def f_conjugacy_classes(F: FusionSystem) -> list[tuple[Subgroup, ...]]:
    """Partition of the subgroups of S into F-conjugacy classes"""
    assigned: set[Subgroup] = set()
    classes = []
    for P in F.subgroups:
        if P in assigned:
            continue
        members = sorted({phi.image() for phi in F.hom_cache[P]}, key=Subgroup.sort_key)
        assigned.update(members)
        classes.append(tuple(members))
    return classes


def _noncentric_witness(F: FusionSystem, members: Sequence[Subgroup]) -> tuple[Subgroup, int] | None:
    for Q in members:
        C = centralizer(F.S, Q)
        outside = [x for x in C.members if x not in Q.member_set]
        if outside:
            return (Q, outside[0])
    return None


def is_centric(F: FusionSystem, P: Subgroup) -> bool:
    F._check_in_sylow(P)
    conjugates = {phi.image() for phi in F.hom_cache[P]}
    return _noncentric_witness(F, sorted(conjugates, key=Subgroup.sort_key)) is None


def centric_subgroups(F: FusionSystem) -> list[FCentricFlag]:
    """One FCentricFlag per F-conjugacy class"""
    table = []
    for members in f_conjugacy_classes(F):
        witness = _noncentric_witness(F, members)
        table.append(FCentricFlag(members, witness is None, witness))
    return table


def centric_members(F: FusionSystem) -> list[Subgroup]:
    """All F-centric subgroups of S"""
    return sorted(
        (Q for flag in centric_subgroups(F) if flag.centric for Q in flag.members),
        key=Subgroup.sort_key,
    )


def focal_subgroup(F: FusionSystem) -> Subgroup:
    """foc(F) = < x^-1 alpha(x) : P <= S, alpha in Aut_F(P), x in P >"""
    group = F.group
    gens = set()
    for P in F.subgroups:
        for alpha in hom_set(F, P, P):
            for x, y in zip(P.members, alpha.images):
                gens.add(group.mult[group.inverse[x]][y])
    return Subgroup.generated(group, gens)


def hyperfocal_subgroup(F: FusionSystem) -> Subgroup:
    """hyp(F): as foc(F) but with alpha restricted to O^p(Aut_F(P))"""
    group = F.group
    gens = set()
    for P in F.subgroups:
        aut = F.automizer(P)
        residual = o_p_residual(aut, F.p)
        assert aut.perms is not None
        for element in residual.members:
            perm = aut.perms[element]
            for i, x in enumerate(P.members):
                gens.add(group.mult[group.inverse[x]][P.members[perm[i]]])
    return Subgroup.generated(group, gens)


def is_nilpotent(F: FusionSystem) -> NilpotencyCertificate:
    """F = F_S(S), checked by comparing Hom_F(P,S) over every P <= S"""
    for P in F.subgroups:
        inner = {phi.images for phi in F.sylow_hom_cache[P]}
        for phi in F.hom_cache[P]:
            if phi.images not in inner:
                return NilpotencyCertificate(False, (P, phi))
    return NilpotencyCertificate(True)


def group_focal_subgroup(F: FusionSystem) -> Subgroup:
    """S ∩ [G,G], which equals foc(F_S(G)) by the focal subgroup theorem"""
    return F.S.intersection(derived_subgroup(F.group))


def group_hyperfocal_subgroup(F: FusionSystem) -> Subgroup:
    """S ∩ O^p(G), which equals hyp(F_S(G)) by the hyperfocal subgroup theorem"""
    return F.S.intersection(o_p_residual(F.group, F.p))
