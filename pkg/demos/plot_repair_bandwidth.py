"""
What a node failure costs
=========================

Each node holds one symbol of many stripes.  Rebuilding it reads
Loc(y_i) units per unit stored, so the average cost is rbar times capacity.
"""

from loclib import RepairConfig, embedded_g0, multi_erasure_repair, node_failure_stats
from loclib.repair import improvement

g0 = embedded_g0()
stats = node_failure_stats(g0, RepairConfig(node_capacity=16))
print("average bandwidth for a 16-unit node:", stats.bandwidth)
print("vs a code with rbar = 5:", f"{float(improvement(stats.r_avg, 5)):.1%} less")

# Two erasures in different groups are still repaired locally.
y = g0.encode([3, 1, 4, 1, 5, 9, 2, 6, 5, 3])
z = list(y)
z[0] = z[4] = None
fixed, cost = multi_erasure_repair(g0, z, [0, 4])
print("repaired:", fixed == y, " symbols read:", cost)
