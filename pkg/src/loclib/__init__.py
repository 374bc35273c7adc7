"""
loclib: linear erasure codes with small average locality over GF(2^m).

Field and matrix arithmetic, locality computation, lower bounds on maximum
and average locality, constructions that meet those bounds, and repair-cost
accounting.
"""

from .errors import *  # noqa: F401,F403
from .field import DEFAULT_POLY, GF256, PRIMITIVE_POLYS, FieldSpec, field_from_dict, make_field
from .linalg import (
    Echelon,
    FieldMatrix,
    generator_from_parity,
    inverse,
    matmul,
    nullspace,
    parity_from_generator,
    rank,
    rref,
    solve,
    systematize,
)
from .code import (
    CodeParams,
    ErasurePattern,
    LinearCode,
    distance_at_least,
    encode,
    erasure_decode,
    helper_set_exists,
    min_distance,
    repair_equation,
)
from .locality import (
    Check,
    LocalGroupPartition,
    LocalityProfile,
    TannerGraph,
    build_local_groups,
    coverage_check,
    coverage_sweep,
    locality_graph,
    locality_profile,
    minimum_repair_set,
    symbol_locality,
    validate_locality_tanner,
)
from .bounds import (
    BoundReport,
    PartitionSpec,
    avg_locality_lb_general,
    avg_locality_lb_general_mixture,
    avg_locality_lb_tight,
    bound_gap,
    bound_report,
    d_upper_bound,
    max_locality_lb,
    optsqrt_min,
    rate_condition,
    tight_objective,
)
from .construct import (
    ConstructionPlan,
    RealizationConfig,
    applicability,
    embedded_g0,
    plan,
    plan_class1,
    plan_class2,
    plan_class3,
    realize,
    realize_graph,
)
from .repair import (
    NodeFailureStats,
    RepairConfig,
    RepairReport,
    multi_erasure_repair,
    node_failure_stats,
    repair_single,
)
from .io import dump_code, load_code

__version__ = "0.1.0"
