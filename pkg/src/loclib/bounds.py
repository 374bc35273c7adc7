"""
Closed-form bounds on maximum and average locality.

Every quantity is an ``int`` or a :class:`fractions.Fraction`; the rate
condition ``k/n > (1 - 1/sqrt(n))^2`` is evaluated in the equivalent
integer form ``4n > (n - k + 1)^2``, so no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .code import check_params
from .errors import BadParams, BudgetExceeded, RateConditionViolated


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _J(n: int, k: int, d: int) -> int:
    check_params(n, k, d)
    return n - k - d + 2


def d_upper_bound(n: int, k: int, r: int) -> int:
    """Largest distance allowed for maximum locality ``r``: ``n - k - ceil(k/r) + 2``."""
    if not 1 <= k < n:
        raise BadParams(f"need 1 <= k < n, got n={n}, k={k}")
    if not 1 <= r <= k:
        raise BadParams(f"need 1 <= r <= k, got r={r}")
    return n - k - ceil_div(k, r) + 2


def max_locality_lb(n: int, k: int, d: int) -> int:
    """Smallest possible maximum locality, ``ceil(k/J)``."""
    return ceil_div(k, _J(n, k, d))


def avg_locality_lb_general(n: int, k: int, d: int) -> Fraction:
    """Lower bound on average locality valid for every ``(n, k, d)`` code."""
    J = _J(n, k, d)
    c = ceil_div(k, J)
    return c * (1 - Fraction(J * c - k, n))


def floor_fraction(n: int, k: int, d: int) -> Fraction:
    """
    Fraction ``alpha`` of symbols sitting at locality ``floor(k/J)`` in the
    extremal configuration; the general bound equals
    ``alpha * floor(k/J) + (1 - alpha) * ceil(k/J)``.
    """
    J = _J(n, k, d)
    return Fraction((J * ceil_div(k, J) - k) * (k // J + 1), n)


def avg_locality_lb_general_mixture(n: int, k: int, d: int) -> Fraction:
    """The general bound written as a two-point mixture of floor/ceil localities."""
    J = _J(n, k, d)
    alpha = floor_fraction(n, k, d)
    return alpha * (k // J) + (1 - alpha) * ceil_div(k, J)


def rate_condition(n: int, k: int) -> bool:
    """``k/n > (1 - 1/sqrt(n))^2``, decided exactly as ``4n > (n-k+1)^2``."""
    if n < 1:
        raise BadParams("n must be positive")
    return 4 * n > (n - k + 1) ** 2


def tight_objective(n: int, k: int, d: int, theta: int) -> Tuple[int, int]:
    """
    Numerator of the refined bound for a fixed ``theta``, and ``a_theta``.

    ``theta`` symbols lie outside the first ``J`` local groups; the other
    ``n - theta`` are split as evenly as possible over ``J`` groups.
    """
    J = _J(n, k, d)
    if not 0 <= theta <= d - 2:
        raise BadParams(f"theta must be in [0, {d - 2}], got {theta}")
    A = n - theta
    a = A + J - J * ceil_div(A, J)
    value = (J - a) * (A // J) ** 2 + a * ceil_div(A, J) ** 2 + (n - d * J + 2 * J) * theta
    return value, a


def tight_objective_trace(n: int, k: int, d: int) -> List[int]:
    return [tight_objective(n, k, d, t)[0] for t in range(d - 1)]


def avg_locality_lb_tight(n: int, k: int, d: int) -> Tuple[Fraction, int, int]:
    """
    Tight lower bound on average locality for high-rate codes.

    Returns ``(bound, theta_star, a_theta_star)``; ties in ``theta`` go to
    the smallest value.

    Raises
    ------
    RateConditionViolated
        If ``4n <= (n - k + 1)^2``; use :func:`avg_locality_lb_general`.
    """
    check_params(n, k, d)
    if not rate_condition(n, k):
        raise RateConditionViolated(
            f"rate {k}/{n} does not exceed (1 - 1/sqrt({n}))^2"
        )
    best = None
    for theta in range(d - 1):
        value, a = tight_objective(n, k, d, theta)
        if best is None or value < best[0]:
            best = (value, theta, a)
    value, theta, a = best
    return Fraction(value, n) - 1, theta, a


def lemma_a1_equiv(n: int, k: int, d: int) -> Tuple[bool, bool]:
    """``(d - 3 < ceil(k/J), rate_condition(n, k))`` for comparison."""
    J = _J(n, k, d)
    return d - 3 < ceil_div(k, J), rate_condition(n, k)


def bound_gap(n: int, k: int, d: int) -> Fraction:
    """Difference between the maximum-locality and average-locality bounds."""
    J = _J(n, k, d)
    c = ceil_div(k, J)
    return Fraction(c * (J * c - k), n)


# ---------------------------------------------------------------------------
# Even-split lemma and its brute-force oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartitionSpec:
    A: int
    zeta: int
    a: int
    min_sum_squares: int

    @property
    def parts(self) -> List[int]:
        lo = self.A // self.zeta
        return [lo] * (self.zeta - self.a) + [ceil_div(self.A, self.zeta)] * self.a


def optsqrt_min(A: int, zeta: int) -> PartitionSpec:
    """Minimum of ``sum(z_j^2)`` over positive integers ``z_1..z_zeta`` summing to ``A``."""
    if not (isinstance(A, int) and isinstance(zeta, int)) or zeta < 1 or A < zeta:
        raise BadParams(f"need A >= zeta >= 1, got A={A}, zeta={zeta}")
    hi = ceil_div(A, zeta)
    a = A + zeta - zeta * hi
    return PartitionSpec(A, zeta, a, (zeta - a) * (A // zeta) ** 2 + a * hi**2)


def brute_force_partition_min(A: int, zeta: int) -> int:
    """Exhaustive minimum of ``sum(z_j^2)`` over compositions of ``A`` into ``zeta`` positive parts."""
    if A > 24 or zeta > 6:
        raise BudgetExceeded(f"enumeration budget is A <= 24, zeta <= 6; got A={A}, zeta={zeta}")
    if zeta < 1 or A < zeta:
        raise BadParams(f"need A >= zeta >= 1, got A={A}, zeta={zeta}")
    return min(sum(z * z for z in parts) for parts in compositions(A, zeta))


def compositions(A: int, parts: int):
    """Yield every tuple of ``parts`` positive integers summing to ``A``."""
    if parts == 1:
        yield (A,)
        return
    for first in range(1, A - parts + 2):
        for rest in compositions(A - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    d: int
    J: int
    r_lb: int
    rbar_lb_general: Fraction
    alpha: Fraction
    rate_condition_holds: bool
    rbar_lb_tight: Optional[Fraction]
    theta_star: Optional[int]
    a_theta: Optional[int]
    gap: Fraction

    @property
    def best_rbar_lb(self) -> Fraction:
        if self.rbar_lb_tight is not None:
            return max(self.rbar_lb_tight, self.rbar_lb_general)
        return self.rbar_lb_general

    def to_dict(self) -> Dict:
        def rat(x):
            return None if x is None else {"num": x.numerator, "den": x.denominator, "decimal": float(x)}

        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "J": self.J,
            "r_lb": self.r_lb,
            "rbar_lb_general": rat(self.rbar_lb_general),
            "alpha": rat(self.alpha),
            "rate_condition_holds": self.rate_condition_holds,
            "rbar_lb_tight": rat(self.rbar_lb_tight),
            "theta_star": self.theta_star,
            "a_theta": self.a_theta,
            "gap": rat(self.gap),
        }


def bound_report(n: int, k: int, d: int) -> BoundReport:
    J = _J(n, k, d)
    rate = rate_condition(n, k)
    tight = theta = a = None
    if rate:
        tight, theta, a = avg_locality_lb_tight(n, k, d)
    return BoundReport(
        n=n,
        k=k,
        d=d,
        J=J,
        r_lb=max_locality_lb(n, k, d),
        rbar_lb_general=avg_locality_lb_general(n, k, d),
        alpha=floor_fraction(n, k, d),
        rate_condition_holds=rate,
        rbar_lb_tight=tight,
        theta_star=theta,
        a_theta=a,
        gap=bound_gap(n, k, d),
    )
