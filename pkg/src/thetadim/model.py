"""Generalized theta graphs: canonical specs, vertices and exact distances.

A graph ``theta:s1,...,sm`` has two centers ``c1``, ``c2`` joined by ``m``
internally disjoint paths; path ``i`` carries ``s_i`` internal vertices, so it
has length ``s_i + 1``.  Internal vertex ``v:i:j`` sits at distance ``j`` from
``c1`` measured along path ``i``.

Distances come from independent routes: :func:`closed_form_distance`
(per-pair case analysis on the path structure), :func:`distance_matrix` (the
same case analysis vectorized over all pairs) and :func:`bfs_distance_matrix`
(breadth-first search over the materialized edge list).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import NamedTuple

import numpy as np


class Vertex(NamedTuple):
    """Symbolic vertex. ``path == 0`` marks a center (``pos`` is 1 or 2)."""

    path: int
    pos: int

    @property
    def is_center(self) -> bool:
        return self.path == 0

    def __str__(self) -> str:
        if self.path == 0:
            return f"c{self.pos}"
        return f"v:{self.path}:{self.pos}"

    def __repr__(self) -> str:
        return str(self)


C1 = Vertex(0, 1)
C2 = Vertex(0, 2)


def v(i: int, j: int) -> Vertex:
    """Internal vertex ``v_{i,j}``."""
    return Vertex(i, j)


class SpecError(ValueError):
    """Invalid graph spec, vertex or literal."""


@dataclass(frozen=True)
class GraphSpec:
    """Canonical (sorted) generalized theta graph.

    ``order[k]`` is the 0-based index, in the caller's original list, of the
    path that became canonical path ``k + 1``.
    """

    lengths: tuple[int, ...]
    order: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if len(self.lengths) < 2:
            raise SpecError("a generalized theta graph needs at least 2 paths")
        if any(a > b for a, b in zip(self.lengths, self.lengths[1:])):
            raise SpecError(f"lengths must be sorted, got {self.lengths}")
        if self.lengths[0] < 1:
            raise SpecError("length must be >= 1")
        if not self.order:
            object.__setattr__(self, "order", tuple(range(len(self.lengths))))

    @property
    def m(self) -> int:
        return len(self.lengths)

    @property
    def n(self) -> int:
        return 2 + sum(self.lengths)

    @property
    def is_cycle(self) -> bool:
        return self.m == 2

    def s(self, i: int) -> int:
        """Internal-vertex count of path ``i`` (1-based)."""
        return self.lengths[i - 1]

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        out = [C1, C2]
        for i, s in enumerate(self.lengths, start=1):
            out.extend(Vertex(i, j) for j in range(1, s + 1))
        return tuple(out)

    @cached_property
    def index(self) -> dict[Vertex, int]:
        return {u: k for k, u in enumerate(self.vertices)}

    def contains(self, u: Vertex) -> bool:
        if u.path == 0:
            return u.pos in (1, 2)
        return 1 <= u.path <= self.m and 1 <= u.pos <= self.lengths[u.path - 1]

    def check(self, u: Vertex) -> Vertex:
        if not isinstance(u, tuple) or not self.contains(Vertex(*u)):
            raise SpecError(f"vertex {u} is not in {self}")
        return Vertex(*u)

    def original_path(self, i: int) -> int:
        """1-based label, in the caller's input order, of canonical path ``i``."""
        return self.order[i - 1] + 1

    def __str__(self) -> str:
        return "theta:" + ",".join(map(str, self.lengths))


def build_spec(raw: Iterable[int]) -> GraphSpec:
    """Validate path lengths and return the canonical sorted spec."""
    raw = list(raw)
    if not raw:
        raise SpecError("length list is empty")
    for k, s in enumerate(raw):
        if isinstance(s, bool) or not isinstance(s, (int, np.integer)):
            raise SpecError(f"length at index {k} is not an integer: {s!r}")
        if s < 1:
            raise SpecError(f"length must be >= 1 (index {k} is {s})")
    if len(raw) < 2:
        raise SpecError("a generalized theta graph needs at least 2 paths")
    order = sorted(range(len(raw)), key=lambda k: (raw[k], k))
    return GraphSpec(tuple(int(raw[k]) for k in order), tuple(order))


def vertices(spec: GraphSpec) -> list[Vertex]:
    """c1, c2, then internal vertices in lexicographic (path, position) order."""
    return list(spec.vertices)


# ---------------------------------------------------------------------------
# literals

def parse_spec(text: str) -> GraphSpec:
    """Parse ``theta:1,2,3``."""
    text = text.strip()
    if not text.startswith("theta:"):
        raise SpecError(f"spec literal must start with 'theta:', got {text!r}")
    body = text[len("theta:"):]
    try:
        raw = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise SpecError(f"bad spec literal {text!r}") from None
    return build_spec(raw)


def parse_vertex(text: str, spec: GraphSpec | None = None) -> Vertex:
    """Parse ``c1``, ``c2`` or ``v:i:j``."""
    text = text.strip()
    if text in ("c1", "c2"):
        u = Vertex(0, int(text[1]))
    else:
        parts = text.split(":")
        if len(parts) != 3 or parts[0] != "v":
            raise SpecError(f"bad vertex literal {text!r}")
        try:
            u = Vertex(int(parts[1]), int(parts[2]))
        except ValueError:
            raise SpecError(f"bad vertex literal {text!r}") from None
        if u.path < 1:
            raise SpecError(f"bad vertex literal {text!r}")
    if spec is not None:
        spec.check(u)
    return u


# ---------------------------------------------------------------------------
# distances

def _detour(spec: GraphSpec, exclude: Sequence[int]) -> int | None:
    """Shortest c1-c2 route avoiding the given paths, or None if none is left."""
    best = None
    for p, s in enumerate(spec.lengths, start=1):
        if p not in exclude:
            best = s + 1 if best is None else min(best, s + 1)
    return best


def closed_form_distance(spec: GraphSpec, a: Vertex, b: Vertex) -> int:
    a, b = spec.check(a), spec.check(b)
    if a == b:
        return 0
    if a.is_center and b.is_center:
        return spec.lengths[0] + 1
    if b.is_center:
        a, b = b, a
    if a.is_center:
        i, j = b
        s = spec.s(i)
        t = _detour(spec, (i,))
        to_c1 = min(j, s + 1 - j + t)
        return to_c1 if a.pos == 1 else min(s + 1 - j, j + t)

    (i, j), (l, k) = a, b
    si = spec.s(i)
    if i == l:
        t = _detour(spec, (i,))
        lo, hi = min(j, k), max(j, k)
        return min(hi - lo, lo + t + (si + 1 - hi))
    sl = spec.s(l)
    best = min(j + k, (si + 1 - j) + (sl + 1 - k))
    t = _detour(spec, (i, l))
    if t is not None:
        best = min(best, j + t + (sl + 1 - k), (si + 1 - j) + t + k)
    return best


def _detour_tables(lengths: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    """Shortest c1-c2 detour avoiding one path, and avoiding a pair of paths."""
    m = len(lengths)
    big = 4 * (sum(lengths) + 2)
    hops = np.array(lengths, dtype=np.int64) + 1
    one = np.where(np.arange(m) == 0, hops[1] if m > 1 else big, hops[0])
    two = np.full((m, m), big, dtype=np.int64)
    for i in range(m):
        for l in range(m):
            rest = [hops[p] for p in range(m) if p != i and p != l]
            if rest:
                two[i, l] = rest[0]
    return one, two


@lru_cache(maxsize=4096)
def _closed_form_matrix(lengths: tuple[int, ...]) -> np.ndarray:
    one, two = _detour_tables(lengths)
    path = np.repeat(np.arange(len(lengths)), lengths)
    a = np.concatenate([np.arange(1, s + 1) for s in lengths])  # hops to c1 along own path
    b = np.repeat(np.array(lengths) + 1, lengths) - a  # hops to c2 along own path
    t1 = one[path]

    P, Q = path[:, None], path[None, :]
    A, B = a[:, None], a[None, :]
    Ab, Bb = b[:, None], b[None, :]
    tpair = two[P, Q]
    cross = np.minimum.reduce([A + B, Ab + Bb, A + tpair + Bb, Ab + tpair + B])
    same = np.minimum(np.abs(A - B), np.minimum(A, B) + t1[:, None] + np.minimum(Ab, Bb))
    inner = np.where(P == Q, same, cross)

    n = len(a) + 2
    dist = np.zeros((n, n), dtype=np.int32)
    dist[2:, 2:] = inner
    dist[0, 2:] = dist[2:, 0] = np.minimum(a, b + t1)
    dist[1, 2:] = dist[2:, 1] = np.minimum(b, a + t1)
    dist[0, 1] = dist[1, 0] = lengths[0] + 1
    dist.flags.writeable = False
    return dist


def distance_matrix(spec: GraphSpec) -> np.ndarray:
    """All-pairs closed-form distances over the dense vertex index (read-only)."""
    return _closed_form_matrix(spec.lengths)


def edge_list(spec: GraphSpec) -> list[list[int]]:
    """Adjacency lists over the dense vertex index."""
    idx = spec.index
    adj: list[list[int]] = [[] for _ in spec.vertices]

    def link(a: Vertex, b: Vertex) -> None:
        adj[idx[a]].append(idx[b])
        adj[idx[b]].append(idx[a])

    for i, s in enumerate(spec.lengths, start=1):
        chain = [C1] + [Vertex(i, j) for j in range(1, s + 1)] + [C2]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
    return adj


def bfs_from(adj: Sequence[Sequence[int]], src: int, allowed=None) -> list[int]:
    """Hop distances from ``src``; -1 for unreachable or disallowed vertices."""
    dist = [-1] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] < 0 and (allowed is None or y in allowed):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def bfs_distance_matrix(spec: GraphSpec) -> np.ndarray:
    adj = edge_list(spec)
    return np.array([bfs_from(adj, x) for x in range(len(adj))], dtype=np.int32)


def distance(spec: GraphSpec, a: Vertex, b: Vertex) -> int:
    """Table lookup into :func:`distance_matrix`."""
    idx = spec.index
    return int(distance_matrix(spec)[idx[spec.check(a)], idx[spec.check(b)]])


def sequence_distance(spec: GraphSpec, seq: Sequence[Vertex]) -> int:
    """Length of the concatenated shortest paths through ``seq``."""
    if not seq:
        raise SpecError("sequence must contain at least one vertex")
    return sum(distance(spec, a, b) for a, b in zip(seq, seq[1:]))


def degree(spec: GraphSpec, u: Vertex) -> int:
    return spec.m if spec.check(u).is_center else 2


def canonical_specs(m: int, max_s: int, min_s: int = 1) -> list[GraphSpec]:
    """Every sorted length vector of multiplicity ``m`` with entries in [min_s, max_s]."""
    from itertools import combinations_with_replacement

    return [GraphSpec(c) for c in combinations_with_replacement(range(min_s, max_s + 1), m)]
