"""
Building codes that meet the bound
==================================

Plan a Tanner graph, then draw field coefficients until the distance holds.
"""

from loclib import RealizationConfig, applicability, locality_profile, min_distance, plan, realize

for params in [(9, 4, 5), (13, 5, 8), (8, 4, 4)]:
    classes = sorted(applicability(*params))
    p = plan(classes[0], *params)
    print(params, "class", p.class_id, "groups", [sorted(g) for g in p.local_groups],
          "global checks", p.global_checks)

    # seeded, so the same code comes back every run
    code = realize(p, RealizationConfig(seed=1))
    prof = locality_profile(code)
    print("   d =", min_distance(code.H), " rbar =", prof.r_avg, " target =", p.target_bound)
