"""Edge contraction and domination number: deciders, oracles and generators."""

from ._core import (
    Decision,
    Graph,
    contract_edge,
    decide,
    decide_bruteforce,
    decide_characterization,
    decide_driver,
    decide_structural,
    domination_number,
    enumerate_min_ds,
    exhaustive_connected,
    find_induced,
    gamma,
    is_free,
    named,
    random_free_connected,
)

__all__ = [
    "Decision",
    "Graph",
    "contract_edge",
    "decide",
    "decide_bruteforce",
    "decide_characterization",
    "decide_driver",
    "decide_structural",
    "domination_number",
    "enumerate_min_ds",
    "exhaustive_connected",
    "find_induced",
    "gamma",
    "is_free",
    "named",
    "random_free_connected",
]
