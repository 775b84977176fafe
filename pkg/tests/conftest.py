"""Shared fixtures: sample networks and a random-network strategy."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qlbn.bayesnet import Network, network_from_dict
from qlbn.quantum import AmplitudeNetwork, amplitudes_from_network

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")

GRID = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]


@st.composite
def binary_net_docs(draw: st.DrawFn) -> dict:
    """A random binary network of up to 4 variables with grid-valued CPTs."""
    n = draw(st.integers(min_value=1, max_value=4))
    names = [f"V{i}" for i in range(n)]
    edges: list[list[str]] = []
    parents: dict[str, list[str]] = {nm: [] for nm in names}
    for i in range(1, n):
        for j in range(i):
            if len(parents[names[i]]) < 2 and draw(st.booleans()):
                parents[names[i]].append(names[j])
                edges.append([names[j], names[i]])
    cpts: dict[str, list[dict]] = {}
    for nm in names:
        rows = []
        for combo in itertools.product(["T", "F"], repeat=len(parents[nm])):
            p = draw(st.sampled_from(GRID))
            rows.append(
                {"given": dict(zip(parents[nm], combo)), "dist": {"T": p, "F": 1 - p}}
            )
        cpts[nm] = rows
    return {
        "variables": [{"name": nm, "outcomes": ["T", "F"]} for nm in names],
        "edges": edges,
        "cpts": cpts,
    }

# Two-player game: P1 declares Cooperate first so outcome vectors read as
# (cooperating opponent, defecting opponent); P2 declares Defect first.
GAME_DOC = {
    "variables": [
        {"name": "P1", "outcomes": ["Cooperate", "Defect"]},
        {"name": "P2", "outcomes": ["Defect", "Cooperate"]},
    ],
    "edges": [["P1", "P2"]],
    "cpts": {
        "P1": [{"given": {}, "dist": {"Cooperate": 0.5, "Defect": 0.5}}],
        "P2": [
            {"given": {"P1": "Cooperate"}, "dist": {"Defect": 0.74, "Cooperate": 0.26}},
            {"given": {"P1": "Defect"}, "dist": {"Defect": 0.87, "Cooperate": 0.13}},
        ],
    },
}

# Two data servers, the second mirroring the first imperfectly.
SERVERS_DOC = {
    "variables": [
        {"name": "S1", "outcomes": ["T", "F"]},
        {"name": "S2", "outcomes": ["T", "F"]},
    ],
    "edges": [["S1", "S2"]],
    "cpts": {
        "S1": [{"given": {}, "dist": {"T": 0.9, "F": 0.1}}],
        "S2": [
            {"given": {"S1": "T"}, "dist": {"T": 0.7, "F": 0.3}},
            {"given": {"S1": "F"}, "dist": {"T": 0.3, "F": 0.7}},
        ],
    },
}


@pytest.fixture
def game_net() -> Network:
    return network_from_dict(GAME_DOC)


@pytest.fixture
def game_amps(game_net: Network) -> AmplitudeNetwork:
    return amplitudes_from_network(game_net)


@pytest.fixture
def servers_net() -> Network:
    return network_from_dict(SERVERS_DOC)
