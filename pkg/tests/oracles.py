"""Reference implementations that share no code with the package.

Graphs are built directly in networkx with tuple node labels, distances come
from networkx BFS, and resolving sets are found by a plain itertools scan.
The closed formulas below are transcribed independently of the registry.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import networkx as nx


def theta_graph(lengths) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from([("c", 1), ("c", 2)])
    for i, s in enumerate(lengths, start=1):
        chain = [("c", 1)] + [(i, j) for j in range(1, s + 1)] + [("c", 2)]
        nx.add_path(g, chain)
    return g


def label(node) -> str:
    """Node label in the package's literal format."""
    return f"c{node[1]}" if node[0] == "c" else f"v:{node[0]}:{node[1]}"


@lru_cache(maxsize=None)
def all_pairs(lengths: tuple[int, ...]) -> dict:
    return dict(nx.all_pairs_shortest_path_length(theta_graph(lengths)))


def resolves(lengths: tuple[int, ...], W) -> bool:
    d = all_pairs(lengths)
    seen = {tuple(d[w][x] for w in W) for x in d}
    return len(seen) == len(d)


@lru_cache(maxsize=None)
def brute_beta(lengths: tuple[int, ...]) -> int:
    nodes = sorted(all_pairs(lengths), key=str)
    for k in range(1, len(nodes) + 1):
        if any(resolves(lengths, W) for W in combinations(nodes, k)):
            return k
    raise AssertionError("full vertex set always resolves")


def theta3_formula(s1: int, s2: int, s3: int) -> int:
    if s1 == s2 == s3 or (s1 == s2 and s3 == s1 + 2):
        return 3
    return 2


def theta4_formula(s1: int, s2: int, s3: int, s4: int) -> int:
    if (s1, s2, s3, s4) in {(1, 1, 1, 1), (1, 1, 1, 3), (2, 2, 2, 2), (2, 2, 2, 4)}:
        return 4
    if s2 == s1 + 1 and s2 == s3 and s4 >= s1 + 4:
        return 2
    if s2 == s1 + 1 and s2 < s3 <= s4:
        return 2
    return 3


def uniform_formula(s: int, m: int) -> int:
    if s == 2:
        return m if m <= 4 else m - 1
    if (m >= 5 and s >= 2) or (m == 4 and s > 2):
        return m - 1
    return m


def cycle_dist(n: int, a: int, b: int) -> int:
    return nx.shortest_path_length(nx.cycle_graph(n), a, b)
