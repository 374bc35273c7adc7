"""
Dense matrices over GF(2^m).

Matrices are immutable and hold their entries as a tuple of row tuples.
Elimination always takes the first nonzero pivot in scan order, so every
routine is deterministic and outputs are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, NoSolution, RankDeficient
from .field import FieldSpec

Vector = List[int]


@dataclass(frozen=True)
class FieldMatrix:
    """A ``rows x cols`` matrix over ``field``."""

    field: FieldSpec
    rows: int
    cols: int
    data: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise DimensionMismatch(
                f"entries do not form a {self.rows}x{self.cols} matrix"
            )
        q = self.field.q
        for r in self.data:
            for x in r:
                if not 0 <= x < q:
                    raise ValueError(f"entry {x} is not an element of GF({q})")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence[int]], cols: Optional[int] = None):
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not data:
                raise DimensionMismatch("cannot infer column count of an empty matrix")
            cols = len(data[0])
        return cls(field, len(data), cols, data)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int):
        return cls(field, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldSpec, size: int):
        return cls(
            field,
            size,
            size,
            tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size)),
        )

    @classmethod
    def random(cls, field: FieldSpec, rows: int, cols: int, rng: np.random.Generator):
        arr = rng.integers(0, field.q, size=(rows, cols))
        return cls.from_rows(field, arr.tolist(), cols)

    # -- views ------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> Tuple[int, ...]:
        """Row-major flattening."""
        return tuple(x for r in self.data for x in r)

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.data[i]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(r[j] for r in self.data)

    def columns(self) -> List[Tuple[int, ...]]:
        return [tuple(c) for c in zip(*self.data)] if self.rows else [()] * self.cols

    def to_list(self) -> List[List[int]]:
        return [list(r) for r in self.data]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.to_list(), dtype=np.int64).reshape(self.rows, self.cols)

    def __repr__(self):
        return f"FieldMatrix({self.rows}x{self.cols} over GF(2^{self.field.m}))"

    # -- algebra ----------------------------------------------------------------

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self.cols, self.rows, tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)))

    T = property(transpose)

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        return matmul(self, other)

    def vecmat(self, x: Sequence[int]) -> Vector:
        """Row vector times matrix: ``x @ self``."""
        if len(x) != self.rows:
            raise DimensionMismatch(f"vector of length {len(x)} vs {self.rows} rows")
        f = self.field
        acc = [0] * self.cols
        for xi, r in zip(x, self.data):
            if xi:
                acc = f.axpy(acc, xi, r)
        return acc

    def matvec(self, x: Sequence[int]) -> Vector:
        """Matrix times column vector: ``self @ x``."""
        if len(x) != self.cols:
            raise DimensionMismatch(f"vector of length {len(x)} vs {self.cols} columns")
        dot = self.field.dot
        return [dot(r, x) for r in self.data]

    def with_entry(self, i: int, j: int, value: int) -> "FieldMatrix":
        rows = self.to_list()
        rows[i][j] = value
        return FieldMatrix.from_rows(self.field, rows, self.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)


def matmul(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    if a.field != b.field:
        raise DimensionMismatch("matrices are over different fields")
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return FieldMatrix(a.field, a.rows, b.cols, tuple(tuple(b.vecmat(r)) for r in a.data))


def vstack(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    if a.cols != b.cols or a.field != b.field:
        raise DimensionMismatch("vstack needs equal column counts and fields")
    return FieldMatrix(a.field, a.rows + b.rows, a.cols, a.data + b.data)


# ---------------------------------------------------------------------------
# Elimination core
# ---------------------------------------------------------------------------


class Echelon:
    """
    Incrementally maintained echelon basis of a subspace of GF(q)^len.

    Each stored vector is monic at its pivot and zero at the pivots of all
    vectors inserted before it, so a single forward pass reduces any vector.
    """

    __slots__ = ("field", "pivots", "basis")

    def __init__(self, field: FieldSpec):
        self.field = field
        self.pivots: List[int] = []
        self.basis: List[Vector] = []

    def reduce(self, v: Sequence[int]) -> Vector:
        axpy = self.field.axpy
        v = list(v)
        for p, b in zip(self.pivots, self.basis):
            c = v[p]
            if c:
                v = axpy(v, c, b)
        return v

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence[int]) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        v = self.reduce(v)
        for p, c in enumerate(v):
            if c:
                self.pivots.append(p)
                self.basis.append(self.field.scale(v, self.field.inv(c)))
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.basis)


def rank_of_vectors(field: FieldSpec, vectors: Iterable[Sequence[int]]) -> int:
    ech = Echelon(field)
    for v in vectors:
        ech.add(v)
    return ech.rank


def rref(M: FieldMatrix) -> Tuple[List[Vector], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    f = M.field
    rows = [list(r) for r in M.data]
    pivots: List[int] = []
    r = 0
    for c in range(M.cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = f.scale(rows[r], f.inv(rows[r][c]))
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                rows[i] = f.axpy(rows[i], rows[i][c], rows[r])
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(M: FieldMatrix) -> int:
    """Rank over GF(2^m)."""
    if M.rows <= M.cols:
        return rank_of_vectors(M.field, M.data)
    return rank_of_vectors(M.field, M.columns())


def column_submatrix(M: FieldMatrix, indices: Sequence[int]) -> FieldMatrix:
    for j in indices:
        if not 0 <= j < M.cols:
            raise IndexOutOfRange(f"column {j} outside [0, {M.cols})")
    idx = list(indices)
    return FieldMatrix(M.field, M.rows, len(idx), tuple(tuple(r[j] for j in idx) for r in M.data))


def row_submatrix(M: FieldMatrix, indices: Sequence[int]) -> FieldMatrix:
    for i in indices:
        if not 0 <= i < M.rows:
            raise IndexOutOfRange(f"row {i} outside [0, {M.rows})")
    return FieldMatrix(M.field, len(indices), M.cols, tuple(M.data[i] for i in indices))


def solve(A: FieldMatrix, b: Sequence[int]) -> Vector:
    """
    Find some ``x`` with ``A x = b``.

    Free variables are set to zero.  When ``rank(A) == A.cols`` the
    solution is unique.

    Raises
    ------
    DimensionMismatch
        If ``len(b) != A.rows``.
    NoSolution
        If the system is inconsistent.
    """
    if len(b) != A.rows:
        raise DimensionMismatch(f"rhs length {len(b)} vs {A.rows} rows")
    aug = FieldMatrix(A.field, A.rows, A.cols + 1, tuple(r + (int(bi),) for r, bi in zip(A.data, b)))
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == A.cols:
        raise NoSolution("inconsistent linear system")
    x = [0] * A.cols
    for r, p in zip(rows, pivots):
        x[p] = r[A.cols]
    return x


def inverse(M: FieldMatrix) -> FieldMatrix:
    if M.rows != M.cols:
        raise DimensionMismatch("only square matrices are invertible")
    n = M.rows
    eye = FieldMatrix.identity(M.field, n)
    aug = FieldMatrix(M.field, n, 2 * n, tuple(a + b for a, b in zip(M.data, eye.data)))
    rows, pivots = rref(aug)
    if len(pivots) < n or pivots[n - 1] >= n:
        raise RankDeficient("matrix is singular")
    return FieldMatrix(M.field, n, n, tuple(tuple(r[n:]) for r in rows))


def left_nullspace(M: FieldMatrix) -> FieldMatrix:
    """Basis (as rows) of ``{u : u M = 0}``."""
    return nullspace(M.transpose())


def nullspace(M: FieldMatrix) -> FieldMatrix:
    """Basis (as rows) of ``{x : M x = 0}``."""
    f = M.field
    rows, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [0] * M.cols
        x[fc] = 1
        for r, p in zip(rows, pivots):
            x[p] = r[fc]  # characteristic 2: -a == a
        basis.append(x)
    return FieldMatrix(f, len(basis), M.cols, tuple(tuple(v) for v in basis))


def systematize(H: FieldMatrix) -> Tuple[FieldMatrix, List[int]]:
    """
    Bring a full-row-rank ``H`` to the form ``[-P^T | I]``.

    The identity block is placed on the rightmost linearly independent
    columns, scanned right to left, so an already systematic matrix comes
    back unchanged with the identity permutation.

    Returns
    -------
    H_sys : FieldMatrix
        ``(T H)[:, perm]`` for an invertible ``T``.
    perm : list of int
        ``perm[j]`` is the original column placed at position ``j``.
    """
    r = H.rows
    ech = Echelon(H.field)
    chosen = []
    for j in range(H.cols - 1, -1, -1):
        if ech.add(H.column(j)):
            chosen.append(j)
            if len(chosen) == r:
                break
    if len(chosen) < r:
        raise RankDeficient(f"rank {len(chosen)} < {r} rows")
    chosen.sort()
    T = inverse(column_submatrix(H, chosen))
    TH = matmul(T, H)
    chosen_set = set(chosen)
    perm = [j for j in range(H.cols) if j not in chosen_set] + chosen
    return column_submatrix(TH, perm), perm


def generator_from_parity(H: FieldMatrix) -> Tuple[FieldMatrix, List[int]]:
    """
    Systematic generator for the code with parity-check matrix ``H``.

    Returns ``(G, perm)`` where ``G`` is in original coordinates and the
    columns ``perm[:k]`` of ``G`` form an identity block.
    """
    H_sys, perm = systematize(H)
    n, r = H.cols, H.rows
    k = n - r
    f = H.field
    # H_sys = [A | I] with A = -P^T; G_sys = [I | P] and P = A^T in char 2
    G_rows = []
    for i in range(k):
        g = [0] * n
        g[perm[i]] = 1
        for j in range(r):
            g[perm[k + j]] = H_sys.data[j][i]
        G_rows.append(tuple(g))
    return FieldMatrix(f, k, n, tuple(G_rows)), perm


def parity_from_generator(G: FieldMatrix) -> FieldMatrix:
    """A full-rank parity-check matrix for the row space of ``G``."""
    return nullspace(G)
