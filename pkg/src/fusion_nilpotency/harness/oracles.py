"""
Group-level p-nilpotency tests, independent of the fusion system code
"""

from __future__ import annotations

from math import gcd

from ..config import DEFAULT_LIMITS, Limits
from ..groups.core import (
    Group,
    Subgroup,
    all_subgroups,
    centralizer,
    is_p_power,
    normalizer,
    sylow_subgroup,
)


def p_complement(G: Group, p: int) -> Subgroup | None:
    """The elements of order prime to p, if they form a subgroup"""
    p_prime = [x for x in G.elements if gcd(G.element_order(x), p) == 1]
    members = set(p_prime)
    for a in p_prime:
        row = G.mult[a]
        if any(row[b] not in members for b in p_prime):
            return None
    return Subgroup.from_members(G, p_prime)


def p_nilpotent_closure(G: Group, p: int) -> bool:
    return p_complement(G, p) is not None


def p_nilpotent_frobenius(G: Group, p: int, limits: Limits = DEFAULT_LIMITS) -> bool:
    """
    Frobenius normal p-complement criterion.

    Every p-subgroup of G is conjugate to a subgroup of S and the index
    |N_G(Q) : C_G(Q)| is a conjugation invariant, so running Q over the
    subgroups of S covers all p-subgroups.
    """
    S = sylow_subgroup(G, p)
    for Q in all_subgroups(S, limits):
        index = normalizer(G, Q).order // centralizer(G, Q).order
        if not is_p_power(index, p):
            return False
    return True
