"""
Repair-cost accounting for single and multiple symbol losses.

A lost symbol is rebuilt from its minimum repair set through the dual
codeword supported on that set.  When a whole node (one symbol of every
stripe it stores) is lost, the data read is ``r_avg * node_capacity`` on
average over which node fails.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .code import ErasurePattern, LinearCode, erasure_decode, repair_equation
from .errors import TooManyErasures
from .locality import LocalityProfile, all_repair_sets, locality_profile, minimum_repair_set


@dataclass(frozen=True)
class RepairConfig:
    """Node and block sizes in abstract capacity units."""

    node_capacity: Fraction
    block_size: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "node_capacity", Fraction(self.node_capacity))
        object.__setattr__(self, "block_size", Fraction(self.block_size))
        if not self.node_capacity >= self.block_size > 0:
            raise ValueError("need node_capacity >= block_size > 0")

    @property
    def blocks_per_node(self) -> Fraction:
        return self.node_capacity / self.block_size


@dataclass(frozen=True)
class RepairReport:
    failed_index: int
    helpers: Tuple[int, ...]
    symbols_downloaded: int
    bandwidth: Fraction
    value: Optional[int] = None


def repair_value(code: LinearCode, y: Sequence[int], i: int, helpers: Sequence[int]) -> int:
    """Rebuild ``y[i]`` from ``y[helpers]`` (``y[i]`` itself is not read)."""
    eq = repair_equation(code.H, i, helpers)
    f = code.field
    acc = 0
    for j, c in eq.items():
        if j != i:
            acc ^= f.mul(c, y[j])
    return acc


def repair_single(
    code: LinearCode,
    profile: Optional[LocalityProfile],
    i: int,
    y: Optional[Sequence[int]] = None,
    block_size: Fraction = Fraction(1),
) -> RepairReport:
    """
    Repair symbol ``i`` from its lexicographically smallest minimum repair set.

    With a codeword ``y`` the rebuilt value is included in the report.
    """
    helpers = minimum_repair_set(code, i)
    if profile is not None and len(helpers) != profile.loc[i]:
        raise ValueError("profile does not belong to this code")
    value = None if y is None else repair_value(code, y, i, helpers)
    return RepairReport(i, tuple(helpers), len(helpers), len(helpers) * Fraction(block_size), value)


@dataclass(frozen=True)
class NodeFailureStats:
    r_avg: Fraction
    r_max: int
    bandwidth: Fraction
    per_symbol: Tuple[RepairReport, ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "locality", "helpers", "bandwidth"])
        for rep in self.per_symbol:
            w.writerow([rep.failed_index, rep.symbols_downloaded, " ".join(map(str, rep.helpers)), str(rep.bandwidth)])
        w.writerow(["summary", f"r={self.r_max}", f"rbar={self.r_avg}", f"bandwidth={self.bandwidth}"])
        return buf.getvalue()


def node_failure_stats(code: LinearCode, cfg: RepairConfig) -> NodeFailureStats:
    """
    Per-symbol repair costs and the average full-node repair bandwidth.

    Node ``i`` holds ``cfg.blocks_per_node`` blocks, each a copy of symbol
    position ``i`` in a different stripe; rebuilding it reads
    ``Loc(y_i) * node_capacity``.  Averaged over ``i`` this is
    ``r_avg * node_capacity``.
    """
    prof = locality_profile(code)
    per = []
    for i in range(code.n):
        rep = repair_single(code, prof, i)
        per.append(
            RepairReport(i, rep.helpers, rep.symbols_downloaded, rep.symbols_downloaded * cfg.node_capacity)
        )
    return NodeFailureStats(prof.r_avg, prof.r_max, prof.r_avg * cfg.node_capacity, tuple(per))


def improvement(r_avg: Fraction, baseline_r_avg: Fraction) -> Fraction:
    """Relative reduction of average locality against a baseline."""
    return 1 - Fraction(r_avg) / Fraction(baseline_r_avg)


def multi_erasure_repair(
    code: LinearCode, y: Sequence[Optional[int]], pattern
) -> Tuple[List[int], Dict[int, int]]:
    """
    Repair several erasures, locally where possible.

    Repeatedly rebuild any erased symbol that has a minimum-size repair set
    made only of available symbols.  Whatever is left is solved jointly
    from the parity checks; each of those symbols is charged ``k`` reads,
    the size of an information set.

    Returns the completed codeword and ``{index: symbols read}``.
    """
    erased = set(pattern.erased if isinstance(pattern, ErasurePattern) else pattern)
    if len(erased) > code.params.d - 1:
        raise TooManyErasures(f"{len(erased)} erasures exceed d - 1 = {code.params.d - 1}")
    z: List[Optional[int]] = [None if i in erased else y[i] for i in range(code.n)]
    cost: Dict[int, int] = {}
    progress = True
    while erased and progress:
        progress = False
        for i in sorted(erased):
            for helpers in all_repair_sets(code, i):
                if not erased.intersection(helpers):
                    z[i] = repair_value(code, z, i, helpers)
                    cost[i] = len(helpers)
                    erased.discard(i)
                    progress = True
                    break
    if erased:
        full = erasure_decode(code, z, ErasurePattern(erased))
        for i in erased:
            z[i] = full[i]
            cost[i] = code.k
    return [int(v) for v in z], cost
