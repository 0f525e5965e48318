"""
Finite groups as dense multiplication tables, with the subgroup machinery
the fusion layer needs.

Element ids are contiguous 0..|G|-1 and the identity is always 0.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from math import lcm
from typing import NamedTuple

import structlog

from ..config import DEFAULT_LIMITS, Limits
from ..errors import GroupInputError, GroupSizeError, NotNormalError, SubgroupError

logger = structlog.get_logger(__name__)

Permutation = tuple[int, ...]


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n"""
    part = 1
    while n % p == 0 and n > 0:
        n //= p
        part *= p
    return part


def is_p_power(n: int, p: int) -> bool:
    return n >= 1 and p_part(n, p) == n


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n**0.5) + 1))


def format_cycles(perm: Permutation) -> str:
    """Disjoint-cycle notation with 1-based points; identity is '()'"""
    seen: set[int] = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        point = perm[start]
        while point != start:
            cycle.append(point)
            seen.add(point)
            point = perm[point]
        cycles.append("(" + " ".join(str(x + 1) for x in cycle) + ")")
    return "".join(cycles) or "()"


@dataclass(frozen=True, eq=False)
class Group:
    """
    A finite group given by its full multiplication table.

    `mult[a][b]` is the product ab; for permutation groups ab means
    "apply b, then a". Groups compare by identity.
    """

    name: str
    mult: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    identity: int = 0
    degree: int | None = None
    perms: tuple[Permutation, ...] | None = None
    generators: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return len(self.mult)

    @property
    def elements(self) -> range:
        return range(len(self.mult))

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        result = self.identity
        base = a
        while k:
            if k & 1:
                result = self.mult[result][base]
            base = self.mult[base][base]
            k >>= 1
        return result

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        return self.mult[self.mult[g][x]][self.inverse[g]]

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x^-1 y^-1 x y"""
        m, inv = self.mult, self.inverse
        return m[m[m[inv[x]][inv[y]]][x]][y]

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for a in self.elements:
            k, x = 1, a
            while x != self.identity:
                x = self.mult[x][a]
                k += 1
            orders.append(k)
        return tuple(orders)

    def element_order(self, a: int) -> int:
        return self.element_orders[a]

    @cached_property
    def is_abelian(self) -> bool:
        return all(
            self.mult[a][b] == self.mult[b][a]
            for a in self.elements
            for b in range(a + 1, self.order)
        )

    @property
    def exponent(self) -> int:
        return lcm(*self.element_orders)

    def describe(self, a: int) -> str:
        """Printable form of an element"""
        if self.perms is not None:
            return format_cycles(self.perms[a])
        return f"g{a}"

    def check_axioms(self) -> None:
        """Exhaustively verify associativity, identity and inverse laws"""
        m, n, e = self.mult, self.order, self.identity
        for a in range(n):
            if m[e][a] != a or m[a][e] != a:
                raise GroupInputError(f"{self.name}: identity law fails at {a}")
            if m[a][self.inverse[a]] != e:
                raise GroupInputError(f"{self.name}: inverse law fails at {a}")
        for a in range(n):
            row_a = m[a]
            for b in range(n):
                row_ab = m[row_a[b]]
                row_b = m[b]
                for c in range(n):
                    if row_ab[c] != row_a[row_b[c]]:
                        raise GroupInputError(
                            f"{self.name}: associativity fails at ({a}, {b}, {c})"
                        )

    def whole(self) -> Subgroup:
        return Subgroup(self, tuple(self.elements))

    def trivial(self) -> Subgroup:
        return Subgroup(self, (self.identity,))

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order})"


def _closure(group: Group, gens: Iterable[int]) -> frozenset[int]:
    gens = sorted({g for g in gens if g != group.identity})
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        step = []
        for x in frontier:
            row = group.mult[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    step.append(y)
        frontier = step
    return frozenset(seen)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of `parent`, stored as its sorted member ids"""

    parent: Group
    members: tuple[int, ...]

    @classmethod
    def generated(cls, parent: Group, gens: Iterable[int]) -> Subgroup:
        return cls(parent, tuple(sorted(_closure(parent, gens))))

    @classmethod
    def from_members(cls, parent: Group, members: Iterable[int]) -> Subgroup:
        """Wrap a member set, verifying closure"""
        member_set = frozenset(members)
        if parent.identity not in member_set:
            raise SubgroupError("member set does not contain the identity")
        for a in member_set:
            if parent.inverse[a] not in member_set:
                raise SubgroupError(f"member set not closed under inverse at {a}")
            for b in member_set:
                if parent.mult[a][b] not in member_set:
                    raise SubgroupError(f"member set not closed at ({a}, {b})")
        return cls(parent, tuple(sorted(member_set)))

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @cached_property
    def position(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.members)}

    def __contains__(self, x: object) -> bool:
        return x in self.member_set

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def non_identity(self) -> tuple[int, ...]:
        e = self.parent.identity
        return tuple(x for x in self.members if x != e)

    def is_subgroup_of(self, other: Subgroup) -> bool:
        _check_same_parent(self, other)
        return self.member_set <= other.member_set

    @cached_property
    def canonical_generators(self) -> tuple[int, ...]:
        """Greedy generating set: lowest ids not yet generated"""
        gens: list[int] = []
        current = frozenset({self.parent.identity})
        for x in self.members:
            if x not in current:
                gens.append(x)
                current = _closure(self.parent, gens)
                if len(current) == self.order:
                    break
        return tuple(gens)

    def conjugate(self, g: int) -> Subgroup:
        """g H g^-1"""
        return Subgroup(
            self.parent, tuple(sorted(self.parent.conj(g, x) for x in self.members))
        )

    def is_normalized_by(self, g: int) -> bool:
        return all(self.parent.conj(g, x) in self.member_set for x in self.members)

    def is_normal_in(self, other: Subgroup) -> bool:
        _check_same_parent(self, other)
        return self.is_subgroup_of(other) and all(
            self.is_normalized_by(g) for g in other.canonical_generators
        )

    def join(self, other: Subgroup) -> Subgroup:
        _check_same_parent(self, other)
        return Subgroup.generated(
            self.parent, self.canonical_generators + other.canonical_generators
        )

    def intersection(self, other: Subgroup) -> Subgroup:
        _check_same_parent(self, other)
        return Subgroup(self.parent, tuple(sorted(self.member_set & other.member_set)))

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @cached_property
    def is_abelian(self) -> bool:
        m = self.parent.mult
        gens = self.canonical_generators
        return all(m[a][b] == m[b][a] for a in gens for b in gens)

    def is_p_group(self, p: int) -> bool:
        return is_p_power(self.order, p)

    @property
    def exponent(self) -> int:
        return lcm(1, *(self.parent.element_order(x) for x in self.members))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.order, self.members)

    def label(self) -> str:
        return "{" + ",".join(str(x) for x in self.members) + "}"

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, members={self.label()})"


def _check_same_parent(a: Subgroup, b: Subgroup) -> None:
    if a.parent is not b.parent:
        raise SubgroupError(
            f"subgroups of different groups: {a.parent.name} vs {b.parent.name}"
        )


def _as_subgroup(G: Group | Subgroup) -> Subgroup:
    return G.whole() if isinstance(G, Group) else G


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism given by its images, aligned with `domain.members`"""

    domain: Subgroup
    codomain: Subgroup
    images: tuple[int, ...]
    _table: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if len(self.images) != self.domain.order:
            raise SubgroupError("image array does not match the domain")
        object.__setattr__(self, "_table", dict(zip(self.domain.members, self.images)))

    def __call__(self, x: int) -> int:
        return self._table[x]

    def as_dict(self) -> dict[int, int]:
        return dict(self._table)

    def image(self) -> Subgroup:
        return Subgroup(self.codomain.parent, tuple(sorted(set(self.images))))

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def is_inclusion(self) -> bool:
        return self.images == self.domain.members

    def is_homomorphism(self) -> bool:
        src, dst = self.domain.parent, self.codomain.parent
        f = self._table
        return all(
            f[src.mult[a][b]] == dst.mult[f[a]][f[b]]
            for a in self.domain.members
            for b in self.domain.members
        )

    def restrict(self, sub: Subgroup) -> GroupHom:
        return GroupHom(sub, self.codomain, tuple(self._table[x] for x in sub.members))

    def with_codomain(self, codomain: Subgroup) -> GroupHom:
        return GroupHom(self.domain, codomain, self.images)

    def after(self, first: GroupHom) -> GroupHom:
        """Composite self o first"""
        return GroupHom(
            first.domain,
            self.codomain,
            tuple(self._table[y] for y in first.images),
        )


def group_from_table(
    name: str,
    mult: Sequence[Sequence[int]],
    *,
    degree: int | None = None,
    perms: Sequence[Permutation] | None = None,
    generators: Sequence[int] = (),
    verify: bool = True,
) -> Group:
    """Build a group from a multiplication table whose identity is element 0"""
    n = len(mult)
    table = tuple(tuple(int(x) for x in row) for row in mult)
    if any(len(row) != n for row in table):
        raise GroupInputError(f"{name}: multiplication table is not square")
    if table[0] != tuple(range(n)):
        raise GroupInputError(f"{name}: element 0 must be the identity")
    inverse = []
    for a in range(n):
        row = table[a]
        try:
            inverse.append(row.index(0))
        except ValueError as exc:
            raise GroupInputError(f"{name}: element {a} has no inverse") from exc
    group = Group(
        name=name,
        mult=table,
        inverse=tuple(inverse),
        degree=degree,
        perms=tuple(perms) if perms is not None else None,
        generators=tuple(generators),
    )
    if verify:
        group.check_axioms()
    return group


def _validate_permutation(perm: Sequence[int], degree: int) -> Permutation:
    images = tuple(int(x) for x in perm)
    if len(images) != degree or sorted(images) != list(range(degree)):
        raise GroupInputError(f"not a bijection on {degree} points: {list(perm)}")
    return images


def group_from_generators(
    degree: int,
    gens: Sequence[Sequence[int]],
    *,
    name: str | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> Group:
    """
    Close a set of permutations under composition.

    Args:
        degree: Number of points; permutations act on 0..degree-1
        gens: Generators as 0-based image tuples
        name: Display name
        limits: Caps; closure beyond `order_cap` raises GroupSizeError

    Returns:
        The generated group, elements numbered by sorted image tuple
    """
    generators = [_validate_permutation(g, degree) for g in gens]
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        step = []
        for x in frontier:
            for g in generators:
                y = tuple(x[i] for i in g)  # x o g
                if y not in seen:
                    seen.add(y)
                    step.append(y)
                    if len(seen) > limits.order_cap:
                        raise GroupSizeError("permutation group closure", limits.order_cap)
        frontier = step

    elements = sorted(seen)
    index = {perm: i for i, perm in enumerate(elements)}
    mult = [
        [index[tuple(a[i] for i in b)] for b in elements]
        for a in elements
    ]
    logger.debug("closed permutation group", degree=degree, order=len(elements))
    return group_from_table(
        name or f"PermGroup({len(elements)})",
        mult,
        degree=degree,
        perms=elements,
        generators=[index[g] for g in generators],
        verify=False,
    )


def sylow_subgroup(G: Group | Subgroup, p: int) -> Subgroup:
    """
    A Sylow p-subgroup, found by normalizer climbing.

    Starts from the lowest-id element of order p and repeatedly adjoins the
    lowest-id element of N(P) outside P whose p-th power lies in P.
    """
    H = _as_subgroup(G)
    group = H.parent
    target = p_part(H.order, p)
    if target == 1:
        return group.trivial()
    first = next(x for x in H.members if group.element_order(x) == p)
    P = Subgroup.generated(group, [first])
    while P.order < target:
        N = normalizer(H, P)
        step = next(
            x
            for x in N.members
            if x not in P.member_set and group.power(x, p) in P.member_set
        )
        P = Subgroup.generated(group, P.canonical_generators + (step,))
    return P


def all_subgroups(H: Group | Subgroup, limits: Limits = DEFAULT_LIMITS) -> list[Subgroup]:
    """Every subgroup of H exactly once, sorted by (order, members)"""
    H = _as_subgroup(H)
    if H.order > limits.subgroup_cap:
        raise GroupSizeError(f"subgroup enumeration of order {H.order}", limits.subgroup_cap)
    group = H.parent
    cyclic: dict[frozenset[int], int] = {}
    for x in H.members:
        cyclic.setdefault(_closure(group, [x]), x)
    found: set[frozenset[int]] = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        step = []
        for A in frontier:
            for C, c in cyclic.items():
                if C <= A:
                    continue
                J = _closure(group, list(A) + [c])
                if J not in found:
                    found.add(J)
                    step.append(J)
        frontier = step
    result = sorted(
        (Subgroup(group, tuple(sorted(members))) for members in found),
        key=Subgroup.sort_key,
    )
    logger.debug("enumerated subgroups", order=H.order, count=len(result))
    return result


def centralizer(H: Group | Subgroup, K: Subgroup) -> Subgroup:
    """Elements of H commuting with every element of K"""
    H = _as_subgroup(H)
    _check_same_parent(H, K)
    m = H.parent.mult
    gens = K.canonical_generators
    return Subgroup(
        H.parent, tuple(h for h in H.members if all(m[h][k] == m[k][h] for k in gens))
    )


def normalizer(H: Group | Subgroup, K: Subgroup) -> Subgroup:
    """Elements h of H with h K h^-1 = K"""
    H = _as_subgroup(H)
    _check_same_parent(H, K)
    return Subgroup(H.parent, tuple(h for h in H.members if K.is_normalized_by(h)))


def center(H: Group | Subgroup) -> Subgroup:
    H = _as_subgroup(H)
    return centralizer(H, H)


def derived_subgroup(H: Group | Subgroup) -> Subgroup:
    """<[x, y] : x, y in H>"""
    H = _as_subgroup(H)
    group = H.parent
    return Subgroup.generated(
        group, {group.commutator(x, y) for x in H.members for y in H.members}
    )


def o_p_residual(G: Group | Subgroup, p: int) -> Subgroup:
    """O^p(G): the subgroup generated by all elements of order prime to p"""
    H = _as_subgroup(G)
    group = H.parent
    return Subgroup.generated(
        group, (x for x in H.members if group.element_order(x) % p != 0)
    )


class Quotient(NamedTuple):
    group: Group
    projection: GroupHom


def quotient_group(G: Group | Subgroup, N: Subgroup) -> Quotient:
    """
    The coset group H/N.

    Cosets are numbered by their lowest element id, so the coset of the
    identity is element 0. The projection maps H onto the whole quotient.
    """
    H = _as_subgroup(G)
    if not N.is_normal_in(H):
        raise NotNormalError(f"subgroup of order {N.order} is not normal")
    group = H.parent
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for x in H.members:
        if x in coset_of:
            continue
        cid = len(reps)
        reps.append(x)
        for n in N.members:
            coset_of[group.mult[x][n]] = cid
    mult = [[coset_of[group.mult[a][b]] for b in reps] for a in reps]
    Q = group_from_table(
        f"{group.name}/N{N.order}" if H.order == group.order else f"H{H.order}/N{N.order}",
        mult,
        verify=False,
    )
    projection = GroupHom(H, Q.whole(), tuple(coset_of[x] for x in H.members))
    return Quotient(Q, projection)
