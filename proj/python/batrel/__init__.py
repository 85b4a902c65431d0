"""Two-terminal network reliability by binary-addition-tree enumeration."""

from ._core import (
    CapabilityError,
    Error,
    InputError,
    Network,
    approximate_reliability,
    bridge_fixture,
    complement_indicator,
    count_level,
    enumerate_states,
    exact_reliability,
    generate_random_network,
    is_connected,
    layer_trace,
    level_mass,
    level_states,
    load_network,
    mcs_estimate,
    parse_network,
    rank_indicator,
    render_network,
    unrank_indicator,
)

__all__ = [
    "CapabilityError",
    "Error",
    "InputError",
    "Network",
    "approximate_reliability",
    "bridge_fixture",
    "complement_indicator",
    "count_level",
    "enumerate_states",
    "exact_reliability",
    "generate_random_network",
    "is_connected",
    "layer_trace",
    "level_mass",
    "level_states",
    "load_network",
    "mcs_estimate",
    "parse_network",
    "rank_indicator",
    "render_network",
    "unrank_indicator",
]
