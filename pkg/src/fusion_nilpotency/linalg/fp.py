"""
Exact linear algebra over the prime field F_p.

Matrices are stored as sparse rows (column -> nonzero residue) and switch to
a dense numpy array once the fill ratio passes COHOMOLOGY_CONFIG's
threshold. Vectors are sparse dicts. Elimination order is fixed, so every
result is reproducible.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from ..config import COHOMOLOGY_CONFIG
from ..errors import DimensionMismatchError, InternalConsistencyError, NotSubspaceError

SparseVector = dict[int, int]
VectorLike = Union[Mapping[int, int], Sequence[int], np.ndarray]


def as_sparse(vec: VectorLike, p: int) -> SparseVector:
    """Normalize a dense or sparse vector to a reduced sparse dict"""
    if isinstance(vec, Mapping):
        items = vec.items()
    else:
        items = enumerate(int(x) for x in vec)
    out = {}
    for k, v in items:
        v = int(v) % p
        if v:
            out[int(k)] = v
    return out


def as_dense(vec: Mapping[int, int], length: int) -> list[int]:
    out = [0] * length
    for k, v in vec.items():
        out[k] = v
    return out


def axpy(target: SparseVector, source: Mapping[int, int], coef: int, p: int) -> None:
    """target += coef * source, in place"""
    for k, v in source.items():
        value = (target.get(k, 0) + coef * v) % p
        if value:
            target[k] = value
        else:
            target.pop(k, None)


@dataclass(frozen=True, eq=False)
class FpMatrix:
    """A rows x cols matrix over F_p"""

    p: int
    rows: int
    cols: int
    _sparse: tuple[SparseVector, ...] | None = None
    _dense: np.ndarray | None = None

    @classmethod
    def from_rows(
        cls, p: int, rows: int, cols: int, row_data: Iterable[Mapping[int, int]]
    ) -> FpMatrix:
        normalized = tuple(as_sparse(r, p) for r in row_data)
        if len(normalized) != rows:
            raise DimensionMismatchError(f"expected {rows} rows, got {len(normalized)}")
        for r in normalized:
            if r and (min(r) < 0 or max(r) >= cols):
                raise DimensionMismatchError(f"column index outside 0..{cols - 1}")
        nnz = sum(len(r) for r in normalized)
        if rows and cols and nnz > COHOMOLOGY_CONFIG["dense_fill_ratio"] * rows * cols:
            dense = np.zeros((rows, cols), dtype=np.int64)
            for i, r in enumerate(normalized):
                for j, v in r.items():
                    dense[i, j] = v
            return cls(p, rows, cols, None, dense)
        return cls(p, rows, cols, normalized, None)

    @classmethod
    def from_dense(cls, p: int, array: Sequence[Sequence[int]] | np.ndarray) -> FpMatrix:
        arr = np.asarray(array, dtype=np.int64)
        if arr.size == 0 and arr.ndim != 2:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-d array, got shape {arr.shape}")
        rows, cols = arr.shape
        arr = np.mod(arr, p)
        return cls.from_rows(p, rows, cols, (as_sparse(row, p) for row in arr))

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> FpMatrix:
        return cls(p, rows, cols, tuple({} for _ in range(rows)), None)

    @classmethod
    def identity(cls, p: int, n: int) -> FpMatrix:
        return cls.from_rows(p, n, n, ({i: 1} for i in range(n)))

    @property
    def is_dense(self) -> bool:
        return self._dense is not None

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> SparseVector:
        if self._dense is not None:
            return {int(j): int(self._dense[i, j]) for j in np.flatnonzero(self._dense[i])}
        assert self._sparse is not None
        return dict(self._sparse[i])

    def sparse_rows(self) -> list[SparseVector]:
        if self._sparse is not None:
            return [dict(r) for r in self._sparse]
        return [self.row(i) for i in range(self.rows)]

    def to_dense(self) -> np.ndarray:
        if self._dense is not None:
            return self._dense.copy()
        out = np.zeros((self.rows, self.cols), dtype=np.int64)
        assert self._sparse is not None
        for i, r in enumerate(self._sparse):
            for j, v in r.items():
                out[i, j] = v
        return out

    def tolist(self) -> list[list[int]]:
        return self.to_dense().tolist()

    @property
    def nnz(self) -> int:
        if self._dense is not None:
            return int(np.count_nonzero(self._dense))
        assert self._sparse is not None
        return sum(len(r) for r in self._sparse)

    def transpose(self) -> FpMatrix:
        columns: list[SparseVector] = [{} for _ in range(self.cols)]
        for i, r in enumerate(self.sparse_rows()):
            for j, v in r.items():
                columns[j][i] = v
        return FpMatrix.from_rows(self.p, self.cols, self.rows, columns)

    def apply(self, vec: VectorLike) -> SparseVector:
        """A x for a column vector x"""
        x = as_sparse(vec, self.p)
        out: SparseVector = {}
        for i, r in enumerate(self.sparse_rows()):
            total = sum(v * x.get(j, 0) for j, v in r.items()) % self.p
            if total:
                out[i] = total
        return out

    def matmul(self, other: FpMatrix) -> FpMatrix:
        if self.cols != other.rows or self.p != other.p:
            raise DimensionMismatchError(
                f"cannot multiply {self.shape} by {other.shape} over F_{self.p}/F_{other.p}"
            )
        if self.is_dense and other.is_dense:
            return FpMatrix.from_dense(self.p, (self.to_dense() @ other.to_dense()) % self.p)
        other_rows = other.sparse_rows()
        result = []
        for r in self.sparse_rows():
            acc: SparseVector = {}
            for k, v in r.items():
                axpy(acc, other_rows[k], v, self.p)
            result.append(acc)
        return FpMatrix.from_rows(self.p, self.rows, other.cols, result)

    def __matmul__(self, other: FpMatrix) -> FpMatrix:
        return self.matmul(other)

    def scale(self, c: int) -> FpMatrix:
        return FpMatrix.from_rows(
            self.p, self.rows, self.cols, ({j: v * c for j, v in r.items()} for r in self.sparse_rows())
        )

    def __add__(self, other: FpMatrix) -> FpMatrix:
        if self.shape != other.shape or self.p != other.p:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        rows = self.sparse_rows()
        for acc, r in zip(rows, other.sparse_rows()):
            axpy(acc, r, 1, self.p)
        return FpMatrix.from_rows(self.p, self.rows, self.cols, rows)

    def __sub__(self, other: FpMatrix) -> FpMatrix:
        return self + other.scale(-1)

    def is_zero(self) -> bool:
        return self.nnz == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return (
            self.p == other.p
            and self.shape == other.shape
            and self.sparse_rows() == other.sparse_rows()
        )

    __hash__ = None  # type: ignore[assignment]

    @staticmethod
    def vstack(p: int, cols: int, blocks: Sequence[FpMatrix]) -> FpMatrix:
        rows: list[SparseVector] = []
        for block in blocks:
            if block.cols != cols:
                raise DimensionMismatchError(f"block has {block.cols} columns, expected {cols}")
            rows.extend(block.sparse_rows())
        return FpMatrix.from_rows(p, len(rows), cols, rows)

    def __repr__(self) -> str:
        kind = "dense" if self.is_dense else "sparse"
        return f"FpMatrix(p={self.p}, shape={self.shape}, nnz={self.nnz}, {kind})"


class EchelonForm:
    """
    Incrementally maintained reduced row echelon basis.

    Pivot rows are normalized (pivot entry 1) and zero in every other pivot
    column, so reducing a vector takes one pass over its pivot entries.
    With `pivot_limit`, columns at or beyond the limit never become pivots;
    they carry bookkeeping tags through the elimination.
    """

    def __init__(self, p: int, pivot_limit: int | None = None):
        self.p = p
        self.pivot_limit = pivot_limit
        self.rows: dict[int, SparseVector] = {}
        self._occurs: defaultdict[int, set[int]] = defaultdict(set)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def reduce(self, vec: Mapping[int, int]) -> SparseVector:
        r = dict(vec)
        for c in [c for c in r if c in self.rows]:
            coef = r.get(c)
            if coef:
                axpy(r, self.rows[c], -coef, self.p)
        return r

    def _pivot_candidates(self, r: SparseVector) -> list[int]:
        if self.pivot_limit is None:
            return list(r)
        return [c for c in r if c < self.pivot_limit]

    def add(self, vec: Mapping[int, int]) -> int | None:
        """Insert a vector; returns its new pivot column, or None if dependent"""
        r = self.reduce(vec)
        candidates = self._pivot_candidates(r)
        if not candidates:
            return None
        c = min(candidates)
        inv = pow(r[c], self.p - 2, self.p)
        if inv != 1:
            r = {k: (v * inv) % self.p for k, v in r.items()}
        for pc in sorted(self._occurs.get(c, ())):
            row = self.rows[pc]
            coef = row[c]
            for k, v in r.items():
                value = (row.get(k, 0) - coef * v) % self.p
                if value:
                    if k not in row:
                        self._occurs[k].add(pc)
                    row[k] = value
                elif k in row:
                    del row[k]
                    self._occurs[k].discard(pc)
        self.rows[c] = r
        for k in r:
            self._occurs[k].add(c)
        return c

    def contains(self, vec: Mapping[int, int]) -> bool:
        return not self._pivot_candidates(self.reduce(vec))

    def basis(self) -> list[SparseVector]:
        return [dict(self.rows[c]) for c in self.pivots]


class RREF(NamedTuple):
    R: FpMatrix
    rank: int
    pivots: tuple[int, ...]


def _rref_dense(arr: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = np.mod(arr.astype(np.int64), p)
    m, n = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        nonzero = np.flatnonzero(A[r:, c])
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), p - 2, p)) % p
        factors = A[:, c].copy()
        factors[r] = 0
        A = (A - np.outer(factors, A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rref(A: FpMatrix) -> RREF:
    """Reduced row echelon form; leftmost pivots, zero rows last"""
    if A.is_dense:
        R, pivots = _rref_dense(A.to_dense(), A.p)
        return RREF(FpMatrix.from_dense(A.p, R), len(pivots), tuple(pivots))
    ech = EchelonForm(A.p)
    for r in A.sparse_rows():
        ech.add(r)
    rows = ech.basis()
    rows.extend({} for _ in range(A.rows - len(rows)))
    return RREF(FpMatrix.from_rows(A.p, A.rows, A.cols, rows), ech.rank, tuple(ech.pivots))


@dataclass(frozen=True, eq=False)
class FpSubspace:
    """A subspace of F_p^ambient_dim with an RREF basis"""

    p: int
    ambient_dim: int
    basis: FpMatrix
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, p: int, ambient_dim: int, vectors: Iterable[VectorLike]) -> FpSubspace:
        ech = EchelonForm(p)
        for v in vectors:
            sv = as_sparse(v, p)
            if sv and max(sv) >= ambient_dim:
                raise DimensionMismatchError(f"vector outside ambient dimension {ambient_dim}")
            ech.add(sv)
        rows = ech.basis()
        return cls(p, ambient_dim, FpMatrix.from_rows(p, len(rows), ambient_dim, rows), tuple(ech.pivots))

    @classmethod
    def zero(cls, p: int, ambient_dim: int) -> FpSubspace:
        return cls.span(p, ambient_dim, [])

    @classmethod
    def full(cls, p: int, ambient_dim: int) -> FpSubspace:
        return cls.span(p, ambient_dim, ({i: 1} for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[SparseVector]:
        return self.basis.sparse_rows()

    def _echelon(self) -> EchelonForm:
        ech = EchelonForm(self.p)
        for v in self.vectors():
            ech.add(v)
        return ech

    def contains(self, vec: VectorLike) -> bool:
        return self._echelon().contains(as_sparse(vec, self.p))

    def is_subspace_of(self, other: FpSubspace) -> bool:
        _check_compatible(self, other)
        ech = other._echelon()
        return all(ech.contains(v) for v in self.vectors())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpSubspace):
            return NotImplemented
        return (
            self.p == other.p
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"FpSubspace(p={self.p}, dim={self.dim}, ambient={self.ambient_dim})"


def _check_compatible(U: FpSubspace, V: FpSubspace) -> None:
    if U.p != V.p or U.ambient_dim != V.ambient_dim:
        raise DimensionMismatchError(
            f"subspaces of F_{U.p}^{U.ambient_dim} and F_{V.p}^{V.ambient_dim}"
        )


def kernel(A: FpMatrix) -> FpSubspace:
    """Right null space {x : A x = 0} inside F_p^cols"""
    reduced = rref(A)
    pivot_set = set(reduced.pivots)
    free = [j for j in range(A.cols) if j not in pivot_set]
    vectors: dict[int, SparseVector] = {f: {f: 1} for f in free}
    for i, pc in enumerate(reduced.pivots):
        for j, v in reduced.R.row(i).items():
            if j != pc:
                vectors[j][pc] = (-v) % A.p
    return FpSubspace.span(A.p, A.cols, (vectors[f] for f in free))


def image(A: FpMatrix) -> FpSubspace:
    """Column space of A inside F_p^rows"""
    return FpSubspace.span(A.p, A.rows, A.transpose().sparse_rows())


def row_space(A: FpMatrix) -> FpSubspace:
    return FpSubspace.span(A.p, A.cols, A.sparse_rows())


def intersect(U: FpSubspace, V: FpSubspace) -> FpSubspace:
    """U ∩ V via the kernel of [U; -V]^T"""
    _check_compatible(U, V)
    if U.dim == 0 or V.dim == 0:
        return FpSubspace.zero(U.p, U.ambient_dim)
    u_rows = U.vectors()
    v_rows = V.vectors()
    stacked = u_rows + [{j: (-x) % U.p for j, x in r.items()} for r in v_rows]
    M = FpMatrix.from_rows(U.p, len(stacked), U.ambient_dim, stacked).transpose()
    combos = kernel(M)
    result = []
    for combo in combos.vectors():
        acc: SparseVector = {}
        for i, c in combo.items():
            if i < len(u_rows):
                axpy(acc, u_rows[i], c, U.p)
        result.append(acc)
    return FpSubspace.span(U.p, U.ambient_dim, result)


def solve(A: FpMatrix, b: VectorLike) -> SparseVector | None:
    """One x with A x = b (free variables zero), or None when b is not in the image"""
    rhs = as_sparse(b, A.p)
    if rhs and max(rhs) >= A.rows:
        raise DimensionMismatchError(f"right-hand side longer than {A.rows}")
    ech = EchelonForm(A.p)
    for i, r in enumerate(A.sparse_rows()):
        row = dict(r)
        if i in rhs:
            row[A.cols] = rhs[i]
        ech.add(row)
    if A.cols in ech.rows:
        return None
    return {pc: row[A.cols] for pc, row in ech.rows.items() if A.cols in row}


def quotient_basis(Z: FpSubspace, B: FpSubspace) -> list[SparseVector]:
    """Vectors of Z's basis that extend a basis of B to one of Z"""
    _check_compatible(Z, B)
    if not B.is_subspace_of(Z):
        raise NotSubspaceError("quotient requires B to lie inside Z")
    ech = EchelonForm(Z.p)
    for v in B.vectors():
        ech.add(v)
    reps = []
    for v in Z.vectors():
        if ech.add(v) is not None:
            reps.append(v)
    return reps


class QuotientCoordinates:
    """
    Coordinates of vectors of span(B, reps) modulo B in the basis `reps`.

    The representative index rides along as a tag column beyond the ambient
    dimension, so one reduction yields the coefficients.
    """

    def __init__(self, p: int, ambient_dim: int, B: Iterable[Mapping[int, int]], reps: Sequence[Mapping[int, int]]):
        self.p = p
        self.ambient_dim = ambient_dim
        self.size = len(reps)
        self._ech = EchelonForm(p, pivot_limit=ambient_dim)
        for v in B:
            self._ech.add(v)
        for i, v in enumerate(reps):
            tagged = dict(v)
            tagged[ambient_dim + i] = 1
            if self._ech.add(tagged) is None:
                raise InternalConsistencyError("quotient representatives are dependent")

    def coordinates(self, vec: Mapping[int, int]) -> list[int]:
        r = self._ech.reduce(as_sparse(vec, self.p))
        if any(k < self.ambient_dim for k in r):
            raise NotSubspaceError("vector is not in the span of the subspace and representatives")
        return [(-r.get(self.ambient_dim + i, 0)) % self.p for i in range(self.size)]
