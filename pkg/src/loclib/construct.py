"""
Builders for LRCs whose average locality meets the lower bounds.

A construction is done in two stages.  A *plan* fixes the Tanner structure
(local groups plus a count of full-support global checks) and the locality
profile it should produce.  :func:`realize` then draws random nonzero
coefficients on that structure until the parity-check matrix has the
design distance, and checks the locality profile with the exhaustive
oracle.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np

from . import bounds
from .bounds import ceil_div
from .code import CodeParams, LinearCode, check_params, distance_at_least
from .errors import HypothesisViolated, NotApplicable, ProfileMismatch, RealizationFailed
from .field import GF256, FieldSpec
from .linalg import FieldMatrix, generator_from_parity, rank
from .locality import TannerGraph, coverage_check, coverage_sweep, locality_profile


@dataclass(frozen=True)
class ConstructionPlan:
    class_id: int
    params: CodeParams
    local_groups: Tuple[FrozenSet[int], ...]
    global_checks: int
    theta_star: Optional[int] = None
    b_theta: Optional[int] = None
    r_last: Optional[int] = None

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def graph(self) -> TannerGraph:
        return TannerGraph.from_groups(self.n, self.local_groups, self.global_checks)

    @property
    def expected_localities(self) -> Tuple[int, ...]:
        loc = [None] * self.n
        for g in self.local_groups:
            for v in g:
                if loc[v] is None or len(g) - 1 < loc[v]:
                    loc[v] = len(g) - 1
        return tuple(loc)

    @property
    def expected_profile(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for v in sorted(self.expected_localities):
            out[v] = out.get(v, 0) + 1
        return out

    @property
    def expected_rbar(self) -> Fraction:
        return Fraction(sum(self.expected_localities), self.n)

    @property
    def target_bound(self) -> Fraction:
        p = self.params
        if self.class_id == 3:
            return bounds.avg_locality_lb_tight(p.n, p.k, p.d)[0]
        return bounds.avg_locality_lb_general(p.n, p.k, p.d)

    def to_dict(self) -> dict:
        return {
            "class": self.class_id,
            "params": {"n": self.params.n, "k": self.params.k, "d": self.params.d},
            "local_groups": [sorted(g) for g in self.local_groups],
            "global_checks": self.global_checks,
            "theta_star": self.theta_star,
            "b_theta": self.b_theta,
            "r_last": self.r_last,
            "expected_profile": {str(k): v for k, v in self.expected_profile.items()},
        }


@dataclass(frozen=True)
class RealizationConfig:
    field: FieldSpec = GF256
    seed: int = 0
    max_retries: int = 64

    def __post_init__(self):
        if self.max_retries < 1:
            raise ValueError("max_retries must be >= 1")


def plan_coverage_ok(plan: ConstructionPlan) -> Tuple[bool, Optional[tuple]]:
    """Distance certificate for a plan's graph.

    Uses the J-subset test when its premises hold, otherwise the full sweep.
    """
    p = plan.params
    try:
        return coverage_check(plan.graph, p.k, p.d)
    except HypothesisViolated:
        return coverage_sweep(plan.graph, p.k, p.d)


def _finish(plan: ConstructionPlan) -> ConstructionPlan:
    p = plan.params
    groups = plan.local_groups
    if any(len(g) < 2 for g in groups):
        raise NotApplicable(f"class {plan.class_id}: a local group would have fewer than 2 symbols")
    if plan.global_checks < 0 or len(groups) + plan.global_checks != p.n - p.k:
        raise NotApplicable(
            f"class {plan.class_id}: {len(groups)} local groups do not fit in {p.n - p.k} checks"
        )
    if set().union(*groups) != set(range(p.n)):
        raise NotApplicable(f"class {plan.class_id}: local groups do not cover every symbol")
    ok, witness = plan_coverage_ok(plan)
    if not ok:
        raise NotApplicable(f"class {plan.class_id}: checks {witness} violate the coverage condition")
    if plan.expected_rbar != plan.target_bound:
        raise NotApplicable(
            f"class {plan.class_id}: planned average {plan.expected_rbar} misses bound {plan.target_bound}"
        )
    return plan


def _contiguous(sizes: Sequence[int], start: int = 0) -> List[FrozenSet[int]]:
    out = []
    for s in sizes:
        out.append(frozenset(range(start, start + s)))
        start += s
    return out


# ---------------------------------------------------------------------------
# Applicability
# ---------------------------------------------------------------------------


def class1_condition(n: int, k: int, d: int) -> bool:
    J = n - k - d + 2
    return (d - 2) % (ceil_div(k, J) + 1) == 0


def class2_condition(n: int, k: int, d: int) -> bool:
    J = n - k - d + 2
    if (k - 1) % J:
        return False
    c = ceil_div(k, J)
    theta = (d - 2) % (c + 1)
    return (d - 2) // (c + 1) >= c - theta


def applicability(n: int, k: int, d: int) -> Set[int]:
    """
    Construction classes available for ``(n, k, d)``.

    A class is listed when its parameter condition holds and its plan is
    structurally sound (every group has at least two symbols, the checks
    fit in ``n - k`` rows, and coverage holds).
    """
    check_params(n, k, d)
    out = set()
    for cid, builder in ((1, plan_class1), (2, plan_class2), (3, plan_class3)):
        try:
            builder(n, k, d)
        except NotApplicable:
            continue
        out.add(cid)
    return out


# ---------------------------------------------------------------------------
# Planners
# ---------------------------------------------------------------------------


def plan_class1(n: int, k: int, d: int, field: FieldSpec = GF256) -> ConstructionPlan:
    """
    Disjoint groups meeting the general bound when ``(ceil(k/J) + 1) | (d - 2)``.

    The first ``J + k`` symbols are split into groups of size
    ``floor(k/J) + 1`` and ``ceil(k/J) + 1``; the remaining ``d - 2``
    symbols form groups of size ``ceil(k/J) + 1``.
    """
    params = CodeParams(n, k, d, field)
    if not class1_condition(n, k, d):
        raise NotApplicable(f"class 1 needs (ceil(k/J)+1) | (d-2) for ({n},{k},{d})")
    J = params.J
    lo, hi = k // J, ceil_div(k, J)
    n_lo = J * hi - k
    n_hi = J + k - J * hi
    n_tail = (d - 2) // (hi + 1)
    sizes = [lo + 1] * n_lo + [hi + 1] * n_hi + [hi + 1] * n_tail
    groups = _contiguous(sizes)
    plan = ConstructionPlan(1, params, tuple(groups), n - k - len(groups))
    return _finish(plan)


def plan_class2(n: int, k: int, d: int, field: FieldSpec = GF256) -> ConstructionPlan:
    """
    Mostly disjoint groups with one group stitched across the others, for
    ``J | (k - 1)``.

    Layout in ascending symbol order: ``J - 1`` groups of size
    ``floor(k/J) + 1``; the disjoint groups of size ``c = ceil(k/J) + 1``;
    ``c - theta`` overlapping groups of size ``c``; and a last group made
    of the top symbol of each overlapping group plus ``theta`` fresh ones.
    """
    params = CodeParams(n, k, d, field)
    if not class2_condition(n, k, d):
        raise NotApplicable(f"class 2 condition fails for ({n},{k},{d})")
    J = params.J
    lo, hi = k // J, ceil_div(k, J)
    c = hi + 1
    theta = (d - 2) % c
    n_disjoint = (d - 2) // c - (hi - theta)
    n_overlap = c - theta
    groups = _contiguous([lo + 1] * (J - 1) + [c] * n_disjoint + [c] * n_overlap)
    overlapping = groups[len(groups) - n_overlap:]
    start = max(max(g) for g in groups) + 1 if groups else 0
    last = {max(g) for g in overlapping} | set(range(start, start + theta))
    groups.append(frozenset(last))
    plan = ConstructionPlan(2, params, tuple(groups), n - k - len(groups), theta_star=theta)
    return _finish(plan)


def plan_class3(n: int, k: int, d: int, field: FieldSpec = GF256) -> ConstructionPlan:
    """
    Groups meeting the refined bound for rate above ``(1 - 1/sqrt(n))^2``.

    ``n - theta*`` symbols are split as evenly as possible into ``J``
    groups.  If ``theta* > 0`` one more group takes the top
    ``|group| - d + 2`` symbols of every group plus the ``theta*``
    remaining symbols; its locality is ``n - J(d - 2) - 1``.
    """
    params = CodeParams(n, k, d, field)
    if not bounds.rate_condition(n, k):
        raise NotApplicable(f"class 3 needs 4n > (n-k+1)^2 for ({n},{k},{d})")
    J = params.J
    _, theta, a = bounds.avg_locality_lb_tight(n, k, d)
    A = n - theta
    sizes = [A // J] * (J - a) + [ceil_div(A, J)] * a
    groups = _contiguous(sizes)
    b = 0 if theta == 0 else 1
    r_last = None
    if theta:
        last = set(range(A, n))
        for g in groups:
            take = len(g) - d + 2
            if take < 0:
                raise NotApplicable(f"class 3: group of size {len(g)} cannot give {take} symbols")
            last |= set(sorted(g)[len(g) - take:])
        groups.append(frozenset(last))
        r_last = n - J * (d - 2) - 1
    plan = ConstructionPlan(
        3, params, tuple(groups), n - k - J - b, theta_star=theta, b_theta=b, r_last=r_last
    )
    return _finish(plan)


PLANNERS = {1: plan_class1, 2: plan_class2, 3: plan_class3}


def plan(class_id: int, n: int, k: int, d: int, field: FieldSpec = GF256) -> ConstructionPlan:
    if class_id not in PLANNERS:
        raise NotApplicable(f"unknown construction class {class_id}")
    return PLANNERS[class_id](n, k, d, field)


# ---------------------------------------------------------------------------
# Realization
# ---------------------------------------------------------------------------


def random_parity(graph: TannerGraph, field: FieldSpec, rng: np.random.Generator) -> FieldMatrix:
    """One row per check, uniform nonzero coefficients on its support."""
    rows = []
    for c in graph.checks:
        row = [0] * graph.n
        support = sorted(c.support)
        for j, v in zip(support, rng.integers(1, field.q, size=len(support)).tolist()):
            row[j] = v
        rows.append(tuple(row))
    return FieldMatrix(field, len(rows), graph.n, tuple(rows))


def realize_graph(
    graph: TannerGraph,
    params: CodeParams,
    cfg: RealizationConfig,
    meta: Optional[dict] = None,
) -> LinearCode:
    """
    Draw coefficients on ``graph`` until ``H`` reaches distance ``params.d``.

    Raises RealizationFailed after ``cfg.max_retries`` draws.
    """
    rng = np.random.default_rng(cfg.seed)
    n, k, d = params.n, params.k, params.d
    for attempt in range(1, cfg.max_retries + 1):
        H = random_parity(graph, cfg.field, rng)
        if rank(H) != n - k or not distance_at_least(H, d):
            continue
        G, _ = generator_from_parity(H)
        info = dict(meta or {})
        info.update(seed=cfg.seed, attempts=attempt)
        return LinearCode(CodeParams(n, k, d, cfg.field), G, H, info)
    raise RealizationFailed(
        f"no distance-{d} realization in {cfg.max_retries} draws over GF({cfg.field.q})",
        attempts=cfg.max_retries,
    )


def realize(plan: ConstructionPlan, cfg: Optional[RealizationConfig] = None) -> LinearCode:
    """
    Realize ``plan`` over ``cfg.field`` and confirm its locality profile.

    Raises
    ------
    RealizationFailed
        No draw reached the design distance within the retry budget.
    ProfileMismatch
        The locality oracle disagrees with the planned profile.
    """
    cfg = cfg or RealizationConfig()
    meta = {"class": plan.class_id, "theta_star": plan.theta_star}
    code = realize_graph(plan.graph, CodeParams(plan.n, plan.params.k, plan.params.d, cfg.field), cfg, meta)
    prof = locality_profile(code)
    if prof.loc != plan.expected_localities:
        raise ProfileMismatch(
            f"oracle localities {prof.loc} differ from plan {plan.expected_localities}"
        )
    return code


# ---------------------------------------------------------------------------
# The explicit (16, 10, 5) code over GF(2^8)
# ---------------------------------------------------------------------------

# Transpose of the generator: one row per code symbol, decimal bytes.
G0_TRANSPOSE = (
    (0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (35, 134, 39, 29, 15, 191, 187, 3, 102, 38),
    (34, 135, 39, 29, 15, 191, 187, 3, 102, 38),
    (234, 137, 29, 254, 245, 110, 153, 9, 223, 2),
    (243, 249, 60, 11, 59, 234, 48, 37, 217, 104),
    (25, 112, 32, 245, 206, 132, 169, 44, 6, 106),
    (0, 0, 0, 1, 1, 1, 1, 0, 0, 0),
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
)


def embedded_g0() -> LinearCode:
    """
    The published (16, 10, 5) code with average locality 3.875, over
    GF(2^8) with polynomial 0x11D.

    The identity rows of the generator are scattered, so ``H`` is built
    directly: each non-identity symbol ``p`` gives a row with 1 at ``p``
    and ``G[j][p]`` at the position carrying information symbol ``j``.
    """
    field = GF256
    G = FieldMatrix.from_rows(field, zip(*G0_TRANSPOSE), 16)
    info_pos = {}
    parity_pos = []
    for pos, row in enumerate(G0_TRANSPOSE):
        if sum(1 for v in row if v) == 1 and 1 in row:
            info_pos[row.index(1)] = pos
        else:
            parity_pos.append(pos)
    H_rows = []
    for p in parity_pos:
        h = [0] * 16
        h[p] = 1
        for j, pos in info_pos.items():
            h[pos] = G0_TRANSPOSE[p][j]
        H_rows.append(tuple(h))
    H = FieldMatrix(field, len(H_rows), 16, tuple(H_rows))
    meta = {"name": "G0", "information_positions": [info_pos[j] for j in range(10)]}
    return LinearCode(CodeParams(16, 10, 5, field), G, H, meta)


def g0_csv() -> str:
    """Transposed generator as CSV, one symbol per line, decimal bytes."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in G0_TRANSPOSE:
        w.writerow(row)
    return buf.getvalue()
