"""
Normalized bar cochain complexes C^*(P; M).

A degree-n cochain is a function (P - 1)^n -> M; coordinates are indexed by
code(x_1..x_n) * dim M + k, where code reads the positions of the x_i in
P.non_identity as base-(|P|-1) digits. The differential is

    (df)(g_1..g_{n+1}) = g_1 . f(g_2..g_{n+1})
                         + sum_i (-1)^i f(.., g_i g_{i+1}, ..)
                         + (-1)^{n+1} f(g_1..g_n)

with terms dropped when a product is the identity.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass
from itertools import product

import structlog

from ..config import COHOMOLOGY_CONFIG, DEFAULT_LIMITS, Limits
from ..errors import BudgetExceededError, InternalConsistencyError
from ..groups.core import Subgroup
from ..linalg.fp import FpMatrix, SparseVector
from ..modules.fpmodule import FpModule, restrict_module

logger = structlog.get_logger(__name__)


def estimate_payload_bytes(order: int, n: int, d: int) -> int:
    """Differential d^n plus a worst-case dense echelon basis of C^n"""
    m = max(order - 1, 0)
    dim_n = m**n * d
    dim_next = m ** (n + 1) * d
    entries = dim_next * (n + 1 + d) + dim_n * dim_n
    return entries * COHOMOLOGY_CONFIG["bytes_per_entry"]


def _code(digits: tuple[int, ...], base: int) -> int:
    code = 0
    for digit in digits:
        code = code * base + digit
    return code


@dataclass(frozen=True, eq=False)
class CochainComplex:
    """C^0..C^{n_max+1} with differentials d^0..d^{n_max}"""

    group: Subgroup
    module: FpModule
    n_max: int
    cochain_dims: tuple[int, ...]
    differentials: tuple[FpMatrix, ...]

    @property
    def p(self) -> int:
        return self.module.p

    def tuples(self, n: int) -> Iterator[tuple[int, ...]]:
        """Degree-n argument tuples as position digits, in coordinate order"""
        return product(range(self.group.order - 1), repeat=n)

    def pull_back(
        self,
        cochain: Mapping[int, int],
        source: CochainComplex,
        n: int,
        element_map: Callable[[int], int],
    ) -> SparseVector:
        """
        The cochain x -> cochain(f(x_1), .., f(x_n)) on this complex.

        `element_map` sends this group's elements into the source group and
        must send non-identity elements to non-identity elements.
        """
        d = self.module.dim
        source_base = source.group.order - 1
        source_pos = {x: i for i, x in enumerate(source.group.non_identity)}
        mapped = [source_pos[element_map(x)] for x in self.group.non_identity]
        result: SparseVector = {}
        for target_code, digits in enumerate(self.tuples(n)):
            source_code = _code(tuple(mapped[t] for t in digits), source_base)
            for k in range(d):
                value = cochain.get(source_code * d + k)
                if value:
                    result[target_code * d + k] = value
        return result

    def __repr__(self) -> str:
        return (
            f"CochainComplex(|P|={self.group.order}, dim M={self.module.dim}, "
            f"n_max={self.n_max}, dims={self.cochain_dims})"
        )


def _differential(P: Subgroup, M: FpModule, n: int) -> FpMatrix:
    group = P.parent
    nonid = P.non_identity
    m = len(nonid)
    d = M.dim
    p = M.p
    position = {x: i for i, x in enumerate(nonid)}
    nonzero = {}
    for x in nonid:
        matrix = M.matrix(x)
        nonzero[x] = [
            [(int(j), int(matrix[k, j])) for j in range(d) if matrix[k, j]]
            for k in range(d)
        ]
    sign_last = -1 if n % 2 == 0 else 1
    rows: list[SparseVector] = []
    for digits in product(range(m), repeat=n + 1):
        elems = [nonid[t] for t in digits]
        block: list[SparseVector] = [{} for _ in range(d)]

        first = _code(digits[1:], m) * d
        for k, entries in enumerate(nonzero[elems[0]]):
            row = block[k]
            for j, v in entries:
                row[first + j] = row.get(first + j, 0) + v

        for i in range(n):
            prod_ = group.mult[elems[i]][elems[i + 1]]
            if prod_ == group.identity:
                continue
            merged = digits[:i] + (position[prod_],) + digits[i + 2 :]
            base = _code(merged, m) * d
            sign = -1 if i % 2 == 0 else 1
            for k in range(d):
                row = block[k]
                row[base + k] = row.get(base + k, 0) + sign

        last = _code(digits[:-1], m) * d
        for k in range(d):
            row = block[k]
            row[last + k] = row.get(last + k, 0) + sign_last

        rows.extend(block)
    return FpMatrix.from_rows(p, m ** (n + 1) * d, m**n * d, rows)


def build_cochain_complex(
    P: Subgroup, M: FpModule, n_max: int, limits: Limits = DEFAULT_LIMITS
) -> CochainComplex:
    """
    Differentials d^0..d^{n_max} of the normalized bar complex.

    Args:
        P: The group; M is restricted to P when it acts on a larger group
        M: The coefficient module
        n_max: Highest degree whose cohomology will be taken
        limits: Memory budget for the largest differential

    Returns:
        The complex, after asserting d^{n+1} d^n = 0 in every built degree
    """
    if M.acting_group != P:
        M = restrict_module(M, P)
    estimate = estimate_payload_bytes(P.order, n_max, M.dim)
    if estimate > limits.budget_bytes:
        raise BudgetExceededError(
            f"degree-{n_max} cochains, |P| = {P.order}, dim M = {M.dim}",
            estimate,
            limits.budget_bytes,
        )
    m = P.order - 1
    dims = tuple(m**n * M.dim for n in range(n_max + 2))
    differentials = tuple(_differential(P, M, n) for n in range(n_max + 1))
    for n in range(n_max):
        if not (differentials[n + 1] @ differentials[n]).is_zero():
            raise InternalConsistencyError(
                f"d^{n + 1} d^{n} != 0 on group of order {P.order}"
            )
    logger.debug("built bar complex", order=P.order, dim=M.dim, n_max=n_max, dims=dims)
    return CochainComplex(P, M, n_max, dims, differentials)
