"""
Built-in groups, addressed by name and parameters.

Shorthand accepted by `parse_catalog_spec`: ``name[:arg[,arg...]]`` with
direct products joined by ``*``, e.g. ``cyclic:2*symmetric:3`` or
``semidirect:7,3,2``.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from itertools import product

from ..config import DEFAULT_LIMITS, Limits
from ..errors import CatalogError
from .core import (
    Group,
    Permutation,
    group_from_generators,
    group_from_table,
    is_prime,
)


def _cycle(degree: int, points: Sequence[int], offset: int = 0) -> Permutation:
    perm = list(range(degree))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        perm[a + offset] = b + offset
    return tuple(perm)


def cyclic(n: int, limits: Limits = DEFAULT_LIMITS) -> Group:
    if n < 1:
        raise CatalogError(f"cyclic order must be positive, got {n}")
    return group_from_generators(
        n, [_cycle(n, list(range(n)))], name=f"C_{n}", limits=limits
    )


def dihedral(order: int, limits: Limits = DEFAULT_LIMITS) -> Group:
    """Dihedral group of the given order 2n"""
    if order < 2 or order % 2:
        raise CatalogError(f"dihedral order must be even and >= 2, got {order}")
    n = order // 2
    if n == 1:
        return group_from_generators(2, [(1, 0)], name="D_2", limits=limits)
    if n == 2:
        return group_from_generators(
            4, [(1, 0, 3, 2), (2, 3, 0, 1)], name="D_4", limits=limits
        )
    rotation = _cycle(n, list(range(n)))
    reflection = tuple((-i) % n for i in range(n))
    return group_from_generators(
        n, [rotation, reflection], name=f"D_{order}", limits=limits
    )


def quaternion(order: int = 8, limits: Limits = DEFAULT_LIMITS) -> Group:
    if order != 8:
        raise CatalogError(f"only the quaternion group of order 8 is built in, got {order}")
    # regular representation: i = (1 2 3 4)(5 6 7 8), j = (1 5 3 7)(2 8 4 6)
    i = (1, 2, 3, 0, 5, 6, 7, 4)
    j = (4, 7, 6, 5, 2, 1, 0, 3)
    return group_from_generators(8, [i, j], name="Q_8", limits=limits)


def symmetric(n: int, limits: Limits = DEFAULT_LIMITS) -> Group:
    if not 1 <= n <= 5:
        raise CatalogError(f"symmetric degree must be in 1..5, got {n}")
    if n == 1:
        return group_from_generators(1, [(0,)], name="S_1", limits=limits)
    gens = [_cycle(n, list(range(n))), _cycle(n, [0, 1])]
    return group_from_generators(n, gens, name=f"S_{n}", limits=limits)


def alternating(n: int, limits: Limits = DEFAULT_LIMITS) -> Group:
    if not 1 <= n <= 5:
        raise CatalogError(f"alternating degree must be in 1..5, got {n}")
    if n < 3:
        return group_from_generators(n, [tuple(range(n))], name=f"A_{n}", limits=limits)
    gens = [_cycle(n, [0, 1, k]) for k in range(2, n)]
    return group_from_generators(n, gens, name=f"A_{n}", limits=limits)


def elementary_abelian(p: int, k: int, limits: Limits = DEFAULT_LIMITS) -> Group:
    if not is_prime(p):
        raise CatalogError(f"elementary abelian needs a prime, got {p}")
    if k < 1:
        raise CatalogError(f"elementary abelian rank must be positive, got {k}")
    degree = p * k
    gens = [_cycle(degree, list(range(p)), offset=p * block) for block in range(k)]
    return group_from_generators(degree, gens, name=f"E_{p}^{k}", limits=limits)


def special_linear_2_3(limits: Limits = DEFAULT_LIMITS) -> Group:
    """SL(2,3) acting on the eight nonzero vectors of F_3^2"""
    vectors = [v for v in product(range(3), repeat=2) if v != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}

    def as_perm(matrix: tuple[tuple[int, int], tuple[int, int]]) -> Permutation:
        (a, b), (c, d) = matrix
        return tuple(
            index[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vectors
        )

    gens = [as_perm(((1, 1), (0, 1))), as_perm(((1, 0), (1, 1)))]
    return group_from_generators(len(vectors), gens, name="SL(2,3)", limits=limits)


def direct_product(left: Group, right: Group) -> Group:
    """Pairs (a, b) numbered a*|right| + b; permutations act on disjoint points"""
    n = right.order
    mult = [
        [left.mult[a1][a2] * n + right.mult[b1][b2] for a2 in left.elements for b2 in right.elements]
        for a1 in left.elements
        for b1 in right.elements
    ]
    perms = None
    degree = None
    if left.perms is not None and right.perms is not None:
        shift = left.degree or 0
        degree = shift + (right.degree or 0)
        perms = [
            left.perms[a] + tuple(shift + x for x in right.perms[b])
            for a in left.elements
            for b in right.elements
        ]
    return group_from_table(
        f"{left.name}x{right.name}", mult, degree=degree, perms=perms, verify=False
    )


def semidirect_cyclic(n: int, m: int, r: int) -> Group:
    """C_n x| C_m with the generator of C_m acting by x -> x^r"""
    if n < 1 or m < 1:
        raise CatalogError("semidirect orders must be positive")
    if pow(r, m, n) != 1 % n:
        raise CatalogError(f"r={r} does not satisfy r^{m} = 1 mod {n}")
    # (a, b) -> a*m + b ; (a1, b1)(a2, b2) = (a1 + r^b1 a2, b1 + b2)
    mult = [
        [
            ((a1 + pow(r, b1, n) * a2) % n) * m + (b1 + b2) % m
            for a2 in range(n)
            for b2 in range(m)
        ]
        for a1 in range(n)
        for b1 in range(m)
    ]
    return group_from_table(f"C_{n}:C_{m}", mult)


CatalogBuilder = Callable[..., Group]

CATALOG: dict[str, tuple[CatalogBuilder, int, str]] = {
    # name: (builder, number of integer params, description)
    "cyclic": (cyclic, 1, "cyclic:n  cyclic group of order n"),
    "dihedral": (dihedral, 1, "dihedral:2n  dihedral group of order 2n"),
    "quaternion": (quaternion, 1, "quaternion:8  quaternion group"),
    "symmetric": (symmetric, 1, "symmetric:n  S_n, n <= 5"),
    "alternating": (alternating, 1, "alternating:n  A_n, n <= 5"),
    "elementary_abelian": (elementary_abelian, 2, "elementary_abelian:p,k  (C_p)^k"),
    "special_linear_2_3": (special_linear_2_3, 0, "special_linear_2_3  SL(2,3)"),
    "semidirect": (semidirect_cyclic, 3, "semidirect:n,m,r  C_n x| C_m acting by x^r"),
}

# names that take their single parameter as an optional default
_DEFAULT_PARAMS = {"quaternion": [8]}


def catalog_listing() -> list[str]:
    lines = [description for _, _, description in CATALOG.values()]
    lines.append("A*B  direct product of two catalog entries")
    return lines


def group_from_catalog(
    name: str, params: Sequence[int] = (), limits: Limits = DEFAULT_LIMITS
) -> Group:
    """
    Build a catalog group.

    Args:
        name: Catalog id (see CATALOG)
        params: Integer parameters
        limits: Order caps

    Returns:
        The group, with deterministic element numbering
    """
    try:
        builder, arity, _ = CATALOG[name]
    except KeyError as exc:
        raise CatalogError(f"unknown catalog group '{name}'") from exc
    params = list(params) or _DEFAULT_PARAMS.get(name, [])
    if len(params) != arity:
        raise CatalogError(f"{name} takes {arity} parameter(s), got {len(params)}")
    if name == "semidirect":
        return builder(*params)
    return builder(*params, limits=limits)


def parse_catalog_spec(spec: str, limits: Limits = DEFAULT_LIMITS) -> Group:
    """Build a group from shorthand such as 'symmetric:3' or 'cyclic:2*cyclic:2'"""
    factors = [part.strip() for part in spec.split("*") if part.strip()]
    if not factors:
        raise CatalogError("empty catalog specification")
    groups = []
    for factor in factors:
        name, _, arg_text = factor.partition(":")
        try:
            params = [int(x) for x in arg_text.split(",") if x.strip()]
        except ValueError as exc:
            raise CatalogError(f"bad parameters in '{factor}'") from exc
        groups.append(group_from_catalog(name.strip(), params, limits))
    result = groups[0]
    for other in groups[1:]:
        result = direct_product(result, other)
    return result
