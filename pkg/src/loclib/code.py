"""
Linear block codes: parameters, encoding, exact minimum distance, and
erasure decoding.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    BadParams,
    DimensionMismatch,
    DistanceTooSmall,
    IndexOutOfRange,
    NoSolution,
    TooManyErasures,
)
from .field import FieldSpec, GF256
from .linalg import (
    Echelon,
    FieldMatrix,
    column_submatrix,
    generator_from_parity,
    matmul,
    parity_from_generator,
    rank,
    solve,
)


@dataclass(frozen=True)
class CodeParams:
    """Design parameters ``(n, k, d)`` of a linear code over ``field``."""

    n: int
    k: int
    d: int
    field: FieldSpec = GF256

    def __post_init__(self):
        check_params(self.n, self.k, self.d)

    @property
    def J(self) -> int:
        return self.n - self.k - self.d + 2

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    @property
    def q(self) -> int:
        return self.field.q


def check_params(n: int, k: int, d: int) -> None:
    """Raise BadParams unless 1 <= k < n and 2 <= d <= n - k + 1."""
    for name, v in (("n", n), ("k", k), ("d", d)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise BadParams(f"{name} must be an integer, got {v!r}")
    if not 1 <= k < n:
        raise BadParams(f"need 1 <= k < n, got n={n}, k={k}")
    if not 2 <= d <= n - k + 1:
        raise BadParams(f"need 2 <= d <= n - k + 1 = {n - k + 1}, got d={d}")


@dataclass(frozen=True)
class ErasurePattern:
    erased: frozenset

    def __init__(self, erased: Iterable[int]):
        object.__setattr__(self, "erased", frozenset(int(i) for i in erased))

    def __len__(self):
        return len(self.erased)

    def __iter__(self):
        return iter(sorted(self.erased))


@dataclass(frozen=True)
class LinearCode:
    """
    An ``(n, k)`` linear code with generator ``G`` and parity check ``H``.

    ``params.d`` is a design distance; construction fails with
    DistanceTooSmall if the actual distance is lower.
    """

    params: CodeParams
    G: FieldMatrix
    H: FieldMatrix
    meta: dict = dc_field(default_factory=dict, compare=False)

    def __post_init__(self):
        p = self.params
        if self.G.shape != (p.k, p.n) or self.H.shape != (p.n - p.k, p.n):
            raise DimensionMismatch(
                f"G {self.G.shape} / H {self.H.shape} inconsistent with n={p.n}, k={p.k}"
            )
        if self.G.field != p.field or self.H.field != p.field:
            raise DimensionMismatch("G, H and params disagree on the field")
        if not matmul(self.G, self.H.transpose()).is_zero():
            raise DimensionMismatch("G H^T != 0")
        if rank(self.G) != p.k:
            raise DimensionMismatch("G is rank deficient")
        if rank(self.H) != p.n - p.k:
            raise DimensionMismatch("H is rank deficient")
        witness = find_dependent_columns(self.H, p.d - 1)
        if witness is not None:
            raise DistanceTooSmall(
                f"columns {list(witness)} of H are dependent, so distance < {p.d}"
            )

    @classmethod
    def from_parity(cls, H: FieldMatrix, d: Optional[int] = None, meta=None) -> "LinearCode":
        """Build the code whose parity-check matrix is ``H``.

        With ``d=None`` the exact minimum distance is computed and used.
        """
        n = H.cols
        k = n - H.rows
        G, _ = generator_from_parity(H)
        if d is None:
            d = min_distance(H)
        return cls(CodeParams(n, k, d, H.field), G, H, dict(meta or {}))

    @classmethod
    def from_generator(cls, G: FieldMatrix, d: Optional[int] = None, meta=None) -> "LinearCode":
        H = parity_from_generator(G)
        if d is None:
            d = min_distance(H)
        return cls(CodeParams(G.cols, G.rows, d, G.field), G, H, dict(meta or {}))

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def field(self) -> FieldSpec:
        return self.params.field

    @cached_property
    def actual_distance(self) -> int:
        return min_distance(self.H)

    @cached_property
    def h_columns(self) -> List[Tuple[int, ...]]:
        return self.H.columns()

    def encode(self, x: Sequence[int]) -> List[int]:
        return encode(self, x)

    def is_codeword(self, y: Sequence[int]) -> bool:
        return not any(self.H.matvec(y))


def encode(code: LinearCode, x: Sequence[int]) -> List[int]:
    """Return ``y = x G``."""
    if len(x) != code.k:
        raise DimensionMismatch(f"information vector has length {len(x)}, expected {code.k}")
    return code.G.vecmat(x)


# ---------------------------------------------------------------------------
# Minimum distance
# ---------------------------------------------------------------------------


def find_dependent_columns(H: FieldMatrix, max_size: int) -> Optional[Tuple[int, ...]]:
    """
    First (lexicographic DFS order) linearly dependent set of at most
    ``max_size`` columns of ``H``, or None if all such sets are independent.
    """
    if max_size <= 0:
        return None
    cols = H.columns()
    n = len(cols)
    f = H.field

    def dfs(start: int, chosen: List[int], ech: Echelon):
        for j in range(start, n):
            child = Echelon(f)
            child.pivots = list(ech.pivots)
            child.basis = list(ech.basis)
            if not child.add(cols[j]):
                return tuple(chosen + [j])
            if len(chosen) + 1 < max_size:
                hit = dfs(j + 1, chosen + [j], child)
                if hit is not None:
                    return hit
        return None

    return dfs(0, [], Echelon(f))


def distance_at_least(H: FieldMatrix, d0: int) -> bool:
    """True iff every ``d0 - 1`` columns of ``H`` are linearly independent."""
    if d0 < 1:
        raise ValueError("d0 must be >= 1")
    if d0 - 1 > H.cols:
        return False
    return find_dependent_columns(H, d0 - 1) is None


def min_distance(H: FieldMatrix) -> int:
    """
    Smallest ``s`` such that some ``s`` columns of ``H`` are dependent.

    Sizes are tried in increasing order, testing every ``s``-subset.  Any
    ``rank(H) + 1`` columns are dependent, which bounds the search.
    """
    cols = H.columns()
    f = H.field
    top = min(H.cols, rank(H) + 1)
    for s in range(1, top + 1):
        for subset in combinations(range(H.cols), s):
            ech = Echelon(f)
            for j in subset:
                if not ech.add(cols[j]):
                    return s
    return H.cols + 1  # only reachable for the zero-dimensional code


def min_weight_support(H: FieldMatrix) -> Tuple[int, ...]:
    """Column set of minimum size that is linearly dependent."""
    d = min_distance(H)
    cols = H.columns()
    for subset in combinations(range(H.cols), d):
        if _rank_cols(H.field, cols, subset) < d:
            return subset
    raise AssertionError("unreachable")


def _rank_cols(f: FieldSpec, cols, subset) -> int:
    ech = Echelon(f)
    for j in subset:
        ech.add(cols[j])
    return ech.rank


# ---------------------------------------------------------------------------
# Erasures and repair equations
# ---------------------------------------------------------------------------


def erasure_decode(code: LinearCode, y: Sequence[Optional[int]], pattern) -> List[int]:
    """
    Fill the erased positions of ``y`` so that ``H z^T = 0``.

    Values of ``y`` at erased positions are ignored (they may be None).

    Raises
    ------
    TooManyErasures
        If the erased columns of ``H`` are linearly dependent, i.e. the
        completion is not unique.
    """
    erased = sorted(pattern.erased if isinstance(pattern, ErasurePattern) else set(pattern))
    n = code.n
    if len(y) != n:
        raise DimensionMismatch(f"word has length {len(y)}, expected {n}")
    for i in erased:
        if not 0 <= i < n:
            raise IndexOutOfRange(f"erased index {i} outside [0, {n})")
    z = [0 if v is None else int(v) for v in y]
    if not erased:
        return z
    for i in erased:
        z[i] = 0
    HE = column_submatrix(code.H, erased)
    if rank(HE) < len(erased):
        raise TooManyErasures(f"{len(erased)} erasures at {erased} are not uniquely decodable")
    syndrome = code.H.matvec(z)  # = -H_E x_E in characteristic 2
    try:
        xe = solve(HE, syndrome)
    except NoSolution:
        raise TooManyErasures("surviving symbols are not consistent with any codeword") from None
    for i, v in zip(erased, xe):
        z[i] = v
    return z


def _check_index(n: int, i: int) -> None:
    if not 0 <= i < n:
        raise IndexOutOfRange(f"symbol index {i} outside [0, {n})")


def helper_set_exists(H: FieldMatrix, i: int, helpers: Iterable[int]) -> bool:
    """
    True iff symbol ``i`` is a linear combination of the ``helpers``
    symbols in every codeword.

    Equivalently some dual codeword is supported inside ``{i} | helpers``
    with a nonzero coefficient at ``i``, i.e. column ``i`` of ``H`` is not
    in the span of the columns outside ``{i} | helpers``.
    """
    n = H.cols
    helpers = set(helpers)
    _check_index(n, i)
    for j in helpers:
        _check_index(n, j)
    if i in helpers:
        raise ValueError("symbol cannot be its own helper")
    cols = H.columns()
    return _outside_span(H.field, cols, i, helpers | {i})


def _outside_span(f: FieldSpec, cols, i: int, support: set) -> bool:
    ech = Echelon(f)
    for j, c in enumerate(cols):
        if j not in support:
            ech.add(c)
    return not ech.contains(cols[i])


def repair_equation(H: FieldMatrix, i: int, helpers: Iterable[int]) -> Dict[int, int]:
    """
    Dual codeword ``c`` supported on ``{i} | helpers`` with ``c[i] = 1``.

    Returns the nonzero coefficients as ``{index: value}``.  Then for every
    codeword ``y``: ``y[i] = sum(c[l] * y[l] for l in helpers)`` (char 2).
    """
    helpers = set(helpers)
    support = helpers | {i}
    outside = [j for j in range(H.cols) if j not in support]
    cols = H.columns()
    rows = [cols[j] for j in outside] + [cols[i]]
    A = FieldMatrix(H.field, len(rows), H.rows, tuple(tuple(r) for r in rows))
    b = [0] * len(outside) + [1]
    try:
        u = solve(A, b)
    except NoSolution:
        raise ValueError(f"no repair equation for symbol {i} from {sorted(helpers)}") from None
    c = H.transpose().matvec(u)
    return {j: v for j, v in enumerate(c) if v}


def dual_words_within(H: FieldMatrix, support: Iterable[int]) -> FieldMatrix:
    """Basis of the dual codewords whose support lies inside ``support``."""
    from .linalg import nullspace

    support = set(support)
    outside = [j for j in range(H.cols) if j not in support]
    A = column_submatrix(H, outside).transpose()  # u such that u . h_j = 0
    U = nullspace(A)
    return matmul(U, H) if U.rows else FieldMatrix(H.field, 0, H.cols, ())
