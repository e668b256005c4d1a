"""Deterministic fixture graphs for the test suite."""

from __future__ import annotations

import numpy as np
import networkx as nx

from walkmix.graph import Graph, largest_connected_component, simplify_undirected
from walkmix.rng import RandomStream


def from_networkx(nxg) -> Graph:
    return simplify_undirected(list(nxg.edges()))


def gnp_lcc(n: int, p: float, seed: int) -> Graph:
    return largest_connected_component(from_networkx(nx.gnp_random_graph(n, p, seed=seed)))


def powerlaw_graph(n: int, m: int, seed: int) -> Graph:
    """Preferential-attachment graph; connected by construction."""
    return from_networkx(nx.barabasi_albert_graph(n, m, seed=seed))


def random_connected_graphs() -> list[Graph]:
    """The 20 seeded random connected graphs (n <= 200) used by the oracle checks."""
    graphs = []
    for i in range(14):
        n = 20 + 13 * i
        p = min(0.5, 2.5 * np.log(n) / n)
        graphs.append(gnp_lcc(n, p, seed=i))
    for i in range(6):
        graphs.append(powerlaw_graph(40 + 30 * i, 2 + (i % 3), seed=100 + i))
    assert all(g.node_count <= 200 for g in graphs)
    return graphs


def capped_powerlaw_lcc(n: int, shape: float, cap: int, seed: int) -> Graph:
    """Configuration-model graph with Pareto degrees clipped to ``cap``.

    Degrees come from the inverse CDF over our own seeded uniforms so the
    sequence is stable across numpy releases. The profile (heavy degree-1/2
    mass, bounded hubs) mirrors published collaboration-network LCC
    statistics, the regime where inverse-degree selection helps most.
    """
    stream = RandomStream(seed)
    degrees = [min(cap, int((1.0 - stream.uniform()) ** (-1.0 / shape))) for _ in range(n)]
    if sum(degrees) % 2:
        degrees[0] += 1
    nxg = nx.configuration_model(degrees, seed=seed)
    return largest_connected_component(simplify_undirected(list(nxg.edges())))


def path_graph(n: int) -> Graph:
    return simplify_undirected([(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return simplify_undirected([(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return simplify_undirected([(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return simplify_undirected([(i, j) for i in range(n) for j in range(i + 1, n)])
