"""
A published (16, 10, 5) code over GF(256)
=========================================

Check the distance, find the local groups, and compare with the bound.
"""

from loclib import avg_locality_lb_tight, build_local_groups, embedded_g0, locality_profile, min_distance
from loclib.linalg import matmul

g0 = embedded_g0()
print("G H^T = 0:", matmul(g0.G, g0.H.T).is_zero())
print("d =", min_distance(g0.H))

# Per-symbol locality from the repair-set oracle
prof = locality_profile(g0)
print("localities", prof.loc)
print("rbar =", prof.r_avg, "=", float(prof.r_avg))

# Greedy local groups: these are the four local checks of the code
part = build_local_groups(g0)
for group, r in zip(part.repair_sets, part.localities):
    print(f"  locality {r}: {sorted(group)}")

print("tight bound:", avg_locality_lb_tight(16, 10, 5)[0])
