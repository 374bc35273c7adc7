import pytest

from loclib import (
    CodeParams,
    GF256,
    RealizationConfig,
    TannerGraph,
    embedded_g0,
    plan_class3,
    realize,
    realize_graph,
)

# Fig. 3 style graph: four local groups with a shared tail, two global checks.
FIG3_GROUPS = [
    range(0, 4),
    range(4, 9),
    range(9, 14),
    (14, 15, 3, 7, 8, 12, 13),
]


@pytest.fixture(scope="session")
def code844():
    """Class-3 (8, 4, 4) code with the Example 1 profile."""
    return realize(plan_class3(8, 4, 4), RealizationConfig(GF256, seed=1))


@pytest.fixture(scope="session")
def code16():
    return realize(plan_class3(16, 10, 5), RealizationConfig(GF256, seed=0))


@pytest.fixture(scope="session")
def g0():
    return embedded_g0()


@pytest.fixture(scope="session")
def fig3_graph():
    return TannerGraph.from_groups(16, FIG3_GROUPS, 2)


@pytest.fixture(scope="session")
def fig3_code(fig3_graph):
    return realize_graph(fig3_graph, CodeParams(16, 10, 5), RealizationConfig(GF256, seed=0))
