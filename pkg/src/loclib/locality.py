"""
Symbol locality, the greedy local-group partition, and Tanner-graph checks.

The locality of symbol ``i`` is the size of the smallest index set ``I``
such that ``y[i]`` is a fixed linear combination of ``y[I]`` over all
codewords.  It is found by exhaustive search over helper sets in order of
size, lexicographically within a size, so the reported witness is the
lexicographically smallest minimum repair set.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .code import LinearCode, _outside_span, dual_words_within, helper_set_exists  # noqa: F401
from .errors import HypothesisViolated, IndexOutOfRange, ShapeMismatch
from .linalg import Echelon, FieldMatrix, rank_of_vectors

_CACHE_KEY = "_loclib_repair_sets"


# ---------------------------------------------------------------------------
# Data types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    support: FrozenSet[int]
    is_local: bool = True

    def __init__(self, support: Iterable[int], is_local: bool = True):
        object.__setattr__(self, "support", frozenset(int(v) for v in support))
        object.__setattr__(self, "is_local", bool(is_local))

    @property
    def degree(self) -> int:
        return len(self.support)


@dataclass(frozen=True)
class TannerGraph:
    """Check-node supports over ``n`` variable nodes, tagged local/global."""

    n: int
    checks: Tuple[Check, ...]

    def __post_init__(self):
        object.__setattr__(self, "checks", tuple(self.checks))
        for c in self.checks:
            if not c.support:
                raise ShapeMismatch("check with empty support")
            if min(c.support) < 0 or max(c.support) >= self.n:
                raise IndexOutOfRange(f"check support {sorted(c.support)} outside [0, {self.n})")

    @classmethod
    def from_groups(cls, n: int, local_groups: Sequence[Iterable[int]], global_checks: int = 0):
        checks = [Check(g, True) for g in local_groups]
        checks += [Check(range(n), False) for _ in range(global_checks)]
        return cls(n, tuple(checks))

    @classmethod
    def from_parity(cls, H: FieldMatrix, local_rows: Optional[Iterable[int]] = None):
        """Graph of ``H``; rows listed in ``local_rows`` are local (default: all
        rows without full support)."""
        rows = range(H.rows)
        if local_rows is None:
            local = {i for i in rows if not all(H.data[i])}
        else:
            local = set(local_rows)
        return cls(
            H.cols,
            tuple(Check((j for j, v in enumerate(H.data[i]) if v), i in local) for i in rows),
        )

    @property
    def local_checks(self) -> List[Check]:
        return [c for c in self.checks if c.is_local]

    @property
    def global_checks(self) -> List[Check]:
        return [c for c in self.checks if not c.is_local]

    def covered(self, idx: Iterable[int]) -> FrozenSet[int]:
        out = set()
        for i in idx:
            out |= self.checks[i].support
        return frozenset(out)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "checks": [{"support": sorted(c.support), "local": c.is_local} for c in self.checks],
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "TannerGraph":
        return cls(
            int(obj["n"]),
            tuple(Check(c["support"], c.get("local", True)) for c in obj["checks"]),
        )


@dataclass(frozen=True)
class LocalityProfile:
    loc: Tuple[int, ...]
    r_max: int
    r_avg: Fraction

    @classmethod
    def from_localities(cls, loc: Sequence[int]) -> "LocalityProfile":
        loc = tuple(int(v) for v in loc)
        return cls(loc, max(loc), Fraction(sum(loc), len(loc)))

    @property
    def n(self) -> int:
        return len(self.loc)

    def histogram(self) -> Dict[int, int]:
        """``{locality: count}`` in ascending locality order."""
        out: Dict[int, int] = {}
        for v in sorted(self.loc):
            out[v] = out.get(v, 0) + 1
        return out


@dataclass(frozen=True)
class LocalGroupPartition:
    """Output of the greedy local-group construction.

    ``groups[j]`` are the symbols newly covered at step ``j``;
    ``repair_sets[j]`` is the full repair set chosen at that step.
    """

    groups: Tuple[FrozenSet[int], ...]
    localities: Tuple[int, ...]
    repair_sets: Tuple[FrozenSet[int], ...] = dc_field(default=())

    @property
    def m(self) -> int:
        return len(self.groups)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(g) for g in self.groups)


# ---------------------------------------------------------------------------
# Locality oracle
# ---------------------------------------------------------------------------


def _search_repair_set(code: LinearCode, i: int) -> Tuple[int, Tuple[int, ...]]:
    n = code.n
    cols = code.h_columns
    f = code.field
    others = [j for j in range(n) if j != i]
    target = cols[i]
    if not any(target):
        raise ValueError(f"symbol {i} is not checked by any parity (distance 1)")
    for t in range(0, n):
        for helpers in combinations(others, t):
            support = set(helpers)
            support.add(i)
            ech = Echelon(f)
            for j in range(n):
                if j not in support:
                    ech.add(cols[j])
            if not ech.contains(target):
                return t, helpers
    raise AssertionError("every checked symbol has a repair set")  # pragma: no cover


def _repair_sets(code: LinearCode) -> Dict[int, Tuple[int, Tuple[int, ...]]]:
    cache = code.__dict__.setdefault(_CACHE_KEY, {})
    return cache


def minimum_repair_set(code: LinearCode, i: int) -> Tuple[int, ...]:
    """Lexicographically smallest helper set of size ``Loc(y_i)``."""
    return _locality_and_helpers(code, i)[1]


def _locality_and_helpers(code: LinearCode, i: int) -> Tuple[int, Tuple[int, ...]]:
    if not 0 <= i < code.n:
        raise IndexOutOfRange(f"symbol index {i} outside [0, {code.n})")
    cache = _repair_sets(code)
    if i not in cache:
        cache[i] = _search_repair_set(code, i)
    return cache[i]


def symbol_locality(code: LinearCode, i: int) -> int:
    """Loc(y_i): the fewest other symbols that determine ``y_i``."""
    return _locality_and_helpers(code, i)[0]


def all_repair_sets(code: LinearCode, i: int) -> List[Tuple[int, ...]]:
    """Every helper set of the minimum size for symbol ``i``, in lexicographic order."""
    cache = code.__dict__.setdefault("_loclib_all_repair_sets", {})
    if i not in cache:
        t = symbol_locality(code, i)
        cols = code.h_columns
        others = [j for j in range(code.n) if j != i]
        cache[i] = [
            h for h in combinations(others, t) if _outside_span(code.field, cols, i, set(h) | {i})
        ]
    return list(cache[i])


def locality_profile(code: LinearCode) -> LocalityProfile:
    return LocalityProfile.from_localities([symbol_locality(code, i) for i in range(code.n)])


def build_local_groups(code: LinearCode) -> LocalGroupPartition:
    """
    Greedy partition of the symbols into local groups.

    While symbols remain uncovered, take the uncovered symbol of smallest
    locality (lowest index on ties), its minimum repair set ``psi``, and
    record ``psi`` minus the already covered symbols as the next group.
    """
    n = code.n
    loc = [symbol_locality(code, i) for i in range(n)]
    covered: set = set()
    groups, localities, psis = [], [], []
    while len(covered) < n:
        p = min((i for i in range(n) if i not in covered), key=lambda i: (loc[i], i))
        psi = frozenset((p,) + minimum_repair_set(code, p))
        new = psi - covered
        groups.append(frozenset(new))
        localities.append(loc[p])
        psis.append(psi)
        covered |= new
    return LocalGroupPartition(tuple(groups), tuple(localities), tuple(psis))


def locality_graph(code: LinearCode, partition: Optional[LocalGroupPartition] = None) -> TannerGraph:
    """Locality Tanner graph: one local check per greedy repair set, then
    full-support global checks filling up to ``n - k`` checks."""
    if partition is None:
        partition = build_local_groups(code)
    n_global = code.n - code.k - partition.m
    return TannerGraph.from_groups(code.n, partition.repair_sets, n_global)


# ---------------------------------------------------------------------------
# Graph validation
# ---------------------------------------------------------------------------


def realize_check(code: LinearCode, support: Iterable[int], seed: int = 0) -> Optional[List[int]]:
    """A dual codeword whose support is exactly ``support``, or None.

    Basis vectors of the dual words inside ``support`` are tried first,
    then seeded random combinations of them.
    """
    support = frozenset(support)
    B = dual_words_within(code.H, support)
    if B.rows == 0:
        return None
    for row in B.data:
        if {j for j, v in enumerate(row) if v} == support:
            return list(row)
    if B.rows == 1:
        return None
    f = code.field
    rng = np.random.default_rng(seed)
    for _ in range(64):
        coeffs = rng.integers(1, f.q, size=B.rows).tolist()
        v = B.vecmat(coeffs)
        if {j for j, x in enumerate(v) if x} == support:
            return v
    return None


def validate_locality_tanner(graph: TannerGraph, code: LinearCode) -> Tuple[bool, List[str]]:
    """
    Check that ``graph`` is a locality Tanner graph of ``code``.

    Requires (a) every symbol ``i`` to lie in some local check of degree
    ``Loc(y_i) + 1`` and (b) the local checks to be realizable as dual
    codewords with exactly their supports, linearly independent.

    Returns ``(ok, diagnostics)``.
    """
    if graph.n != code.n:
        raise ShapeMismatch(f"graph has {graph.n} variable nodes, code has n={code.n}")
    problems: List[str] = []
    local = graph.local_checks
    for i in range(code.n):
        want = symbol_locality(code, i) + 1
        degrees = sorted(c.degree for c in local if i in c.support)
        if not degrees:
            problems.append(f"VN {i} is in no local check")
        elif want not in degrees:
            problems.append(f"VN {i}: local check degrees {degrees}, expected one of degree {want}")
    rows = []
    for idx, c in enumerate(local):
        row = realize_check(code, c.support)
        if row is None:
            problems.append(f"local check {idx} {sorted(c.support)} is not a dual codeword support")
        else:
            rows.append(row)
    if len(rows) == len(local) and rank_of_vectors(code.field, rows) < len(rows):
        problems.append("local checks are linearly dependent")
    return (not problems, problems)


def _check_certificate_premises(graph: TannerGraph) -> None:
    local = graph.local_checks
    for idx, c in enumerate(local):
        others = set()
        for jdx, o in enumerate(local):
            if jdx != idx:
                others |= o.support
        if not (c.support - others):
            raise HypothesisViolated(
                f"local check {idx} {sorted(c.support)} has no private variable node"
            )
    for c in graph.global_checks:
        if len(c.support) != graph.n:
            raise HypothesisViolated("a global check does not touch every variable node")


def coverage_check(graph: TannerGraph, k: int, d: int) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """
    Every ``J`` local checks must cover at least ``J + k`` variable nodes,
    with ``J = n - k - d + 2``.

    Only valid when each local check owns a private variable node and each
    global check is full; otherwise HypothesisViolated is raised and
    :func:`coverage_sweep` should be used.

    Returns ``(ok, witness)``; ``witness`` indexes ``graph.local_checks``.
    """
    _check_certificate_premises(graph)
    J = graph.n - k - d + 2
    local = graph.local_checks
    for combo in combinations(range(len(local)), J):
        cov = set()
        for c in combo:
            cov |= local[c].support
        if len(cov) < J + k:
            return False, combo
    return True, None


def coverage_sweep(graph: TannerGraph, k: int, d: int) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """
    Full sweep: every ``gamma`` checks cover at least ``gamma + k`` variable
    nodes for each ``gamma`` in ``[J, n - k]``.  Witness indexes ``graph.checks``.
    """
    J = graph.n - k - d + 2
    m = len(graph.checks)
    for gamma in range(max(J, 1), min(graph.n - k, m) + 1):
        for combo in combinations(range(m), gamma):
            if len(graph.covered(combo)) < gamma + k:
                return False, combo
    return True, None
