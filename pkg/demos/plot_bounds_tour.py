"""
How small can the average locality be?
======================================

Three lower bounds for an (n, k, d) code, computed exactly.
"""

from loclib import bound_report, max_locality_lb
from loclib.io import fmt_rational

# The maximum-locality bound: some symbol needs at least this many helpers.
print("r >=", max_locality_lb(16, 10, 5))

# The average can sit below it.  With the rate condition the tight form applies.
rep = bound_report(16, 10, 5)
print("rbar >=", fmt_rational(rep.rbar_lb_general), "(general)")
print("rbar >=", fmt_rational(rep.rbar_lb_tight), "(tight), theta* =", rep.theta_star)

# Sweep k at fixed n and d.  The tight bound only exists for high-rate codes.
print("\n k   general   tight")
for k in range(1, 13):
    r = bound_report(16, k, 5)
    tight = "-" if r.rbar_lb_tight is None else f"{float(r.rbar_lb_tight):.4f}"
    print(f"{k:>2}   {float(r.rbar_lb_general):.4f}    {tight}")
