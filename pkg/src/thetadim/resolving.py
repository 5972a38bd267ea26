"""Vector representations, resolving sets and exact metric dimension search."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice

import numpy as np

from . import _kernels
from .model import C1, C2, GraphSpec, SpecError, Vertex, bfs_from, degree, distance_matrix, edge_list

DEFAULT_WITNESS_CAP = 64


def landmark_set(spec: GraphSpec, W: Iterable[Vertex]) -> tuple[Vertex, ...]:
    """Validate an ordered landmark set: members of ``spec``, no repeats."""
    out = tuple(spec.check(w) for w in W)
    if len(set(out)) != len(out):
        raise SpecError(f"landmark set has duplicates: {[str(w) for w in out]}")
    return out


def vector_representation(spec: GraphSpec, W: Sequence[Vertex], u: Vertex) -> tuple[int, ...]:
    W = landmark_set(spec, W)
    if not W:
        raise SpecError("landmark set is empty")
    dist = distance_matrix(spec)
    idx = spec.index
    x = idx[spec.check(u)]
    return tuple(int(dist[idx[w], x]) for w in W)


def _codes(spec: GraphSpec, W: Sequence[Vertex]) -> list[tuple[int, ...]]:
    dist = distance_matrix(spec)
    rows = [spec.index[w] for w in W]
    return [tuple(int(c) for c in col) for col in dist[rows].T]


@dataclass(frozen=True)
class ResolutionVerdict:
    resolved: bool
    collision: tuple[Vertex, Vertex] | None = None

    def __bool__(self) -> bool:
        return self.resolved


def verify_resolving(spec: GraphSpec, W: Sequence[Vertex]) -> ResolutionVerdict:
    """Check every pair of vertices is told apart by ``W``.

    On failure the reported collision is the lexicographically first colliding
    pair under the canonical vertex order.
    """
    W = landmark_set(spec, W)
    if not W:
        # the empty set resolves nothing: c1 and c2 share the empty vector
        return ResolutionVerdict(False, (C1, C2))
    groups: dict[tuple[int, ...], list[int]] = {}
    for x, code in enumerate(_codes(spec, W)):
        groups.setdefault(code, []).append(x)
    clashes = [g for g in groups.values() if len(g) > 1]
    if not clashes:
        return ResolutionVerdict(True)
    first = min(clashes, key=lambda g: g[0])
    vs = spec.vertices
    return ResolutionVerdict(False, (vs[first[0]], vs[first[1]]))


def is_resolving(spec: GraphSpec, W: Sequence[Vertex]) -> bool:
    return verify_resolving(spec, W).resolved


# ---------------------------------------------------------------------------
# exact search

@dataclass(frozen=True)
class BetaResult:
    beta: int
    witnesses: tuple[tuple[Vertex, ...], ...]
    basis_count: int
    subsets_examined: int
    cap: int
    pruned: bool = False

    @property
    def truncated(self) -> bool:
        return self.basis_count > len(self.witnesses)


class SearchLimitExceeded(RuntimeError):
    """Raised when the subset-size ceiling is hit before a resolving set is found."""


def _path_groups(spec: GraphSpec) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for i, s in enumerate(spec.lengths, start=1):
        groups.setdefault(s, []).append(i)
    return [g for g in groups.values() if len(g) > 1]


def _orbit_canonical(spec: GraphSpec, groups: list[list[int]], subset: Sequence[int]) -> bool:
    # one representative per orbit of equal-length path permutations:
    # per-path landmark positions must be non-increasing across each group
    vs = spec.vertices
    sig: dict[int, list[int]] = {}
    for x in subset:
        u = vs[x]
        if u.path:
            sig.setdefault(u.path, []).append(u.pos)
    for g in groups:
        keys = [tuple(sig.get(i, ())) for i in g]
        if any(a < b for a, b in zip(keys, keys[1:])):
            return False
    return True


def _scan_pruned(spec: GraphSpec, dist: np.ndarray, k: int, cap: int, backend):
    groups = _path_groups(spec)
    it = (c for c in combinations(range(spec.n), k) if _orbit_canonical(spec, groups, c))
    count, examined, found = 0, 0, []
    while True:
        block = np.array(list(islice(it, 8192)), dtype=np.int64).reshape(-1, k)
        if not block.shape[0]:
            break
        examined += block.shape[0]
        hits = block[_kernels.resolves_block(dist, block, backend)]
        if count < cap and hits.shape[0]:
            found.append(hits[: cap - count])
        count += hits.shape[0]
    wit = np.concatenate(found) if found else np.empty((0, k), dtype=np.int64)
    return count, wit, examined


def metric_dimension(
    spec: GraphSpec,
    cap: int = DEFAULT_WITNESS_CAP,
    *,
    pruned: bool = False,
    max_k: int | None = None,
    backend: str | None = None,
) -> BetaResult:
    """Smallest resolving set size, certified by exhaustive ascending search.

    Subsets of each size are scanned in lexicographic order over the dense
    vertex index; every resolving subset of the minimum size is counted and
    the first ``cap`` are kept.  ``pruned`` skips subsets equivalent under a
    permutation of equal-length paths (the witnesses are then orbit
    representatives).
    """
    if cap < 0:
        raise ValueError("witness cap must be non-negative")
    dist = distance_matrix(spec)
    examined = 0
    top = spec.n if max_k is None else min(max_k, spec.n)
    for k in range(1, top + 1):
        if pruned:
            count, wit, seen = _scan_pruned(spec, dist, k, cap, backend)
        else:
            count, wit, seen = _kernels.scan_level(dist, k, cap, backend)
        examined += seen
        if count:
            vs = spec.vertices
            witnesses = tuple(tuple(vs[x] for x in row) for row in wit.tolist())
            return BetaResult(k, witnesses, int(count), examined, cap, pruned)
    raise SearchLimitExceeded(f"no resolving set of size <= {top} for {spec}")


@lru_cache(maxsize=4096)
def _cached_beta(lengths: tuple[int, ...], cap: int, pruned: bool) -> BetaResult:
    return metric_dimension(GraphSpec(lengths), cap, pruned=pruned)


def cached_metric_dimension(spec: GraphSpec, cap: int = DEFAULT_WITNESS_CAP, pruned: bool = False) -> BetaResult:
    return _cached_beta(spec.lengths, cap, pruned)


def has_resolving_set_of_size(spec: GraphSpec, k: int, backend: str | None = None) -> bool:
    count, _, _ = _kernels.scan_level(distance_matrix(spec), k, 0, backend)
    return count > 0


# ---------------------------------------------------------------------------
# structure: MMD, identical paths, twin lemmas

def path_vertices(spec: GraphSpec, i: int, centers: bool = True) -> list[Vertex]:
    inner = [Vertex(i, j) for j in range(1, spec.s(i) + 1)]
    return [C1, *inner, C2] if centers else inner


def cycle_vertices(spec: GraphSpec, i: int, j: int) -> list[Vertex]:
    """Vertex set of ``C_{i,j}``, the cycle formed by paths ``i`` and ``j``."""
    if i == j:
        raise SpecError("C_{i,j} needs two distinct paths")
    return path_vertices(spec, i) + path_vertices(spec, j, centers=False)


def _distance_rows(spec: GraphSpec, restriction):
    """Distance lookup, either graph-wide or inside an induced subgraph."""
    idx = spec.index
    if restriction is None:
        dist = distance_matrix(spec)
        return (lambda a, b: int(dist[idx[a], idx[b]])), None
    keep = {idx[spec.check(u)] for u in restriction}
    adj = edge_list(spec)
    sub = [[y for y in adj[x] if y in keep] if x in keep else [] for x in range(len(adj))]
    cache: dict[int, list[int]] = {}

    def d(a: Vertex, b: Vertex) -> int:
        xa = idx[a]
        if xa not in cache:
            cache[xa] = bfs_from(sub, xa, keep)
        out = cache[xa][idx[b]]
        if out < 0:
            raise SpecError(f"{b} is unreachable from {a} inside the restriction")
        return out

    return d, sub


def is_mmd(spec: GraphSpec, u: Vertex, w: Vertex, restriction=None) -> bool:
    d, sub = _distance_rows(spec, restriction)
    return _mmd(spec, u, w, d, sub)


def _mmd(spec, u, w, d, sub) -> bool:
    if u == w:
        return False
    idx, vs = spec.index, spec.vertices
    adj = sub if sub is not None else edge_list(spec)

    def maximally_distant(a, b):
        dab = d(a, b)
        return all(d(vs[y], b) <= dab for y in adj[idx[a]])

    return maximally_distant(u, w) and maximally_distant(w, u)


def mmd_set(spec: GraphSpec, u: Vertex, restriction: Iterable[Vertex] | None = None) -> frozenset[Vertex]:
    """Vertices mutually maximally distant from ``u``.

    With ``restriction`` the test runs inside the induced subgraph on those
    vertices (e.g. :func:`cycle_vertices`), using its own distances.
    """
    u = spec.check(u)
    pool = spec.vertices if restriction is None else [spec.check(x) for x in restriction]
    if restriction is not None:
        restriction = list(pool)
        if u not in restriction:
            raise SpecError(f"{u} is not inside the restriction")
    d, sub = _distance_rows(spec, restriction)
    return frozenset(x for x in pool if _mmd(spec, x, u, d, sub))


@dataclass(frozen=True)
class IPEntry:
    u: Vertex
    v: Vertex
    s: int
    count: int

    def __str__(self) -> str:
        return f"({self.u},{self.v},{self.s}^{self.count})"


def identical_path_set(spec: GraphSpec) -> list[IPEntry]:
    counts = Counter(spec.lengths)
    return [IPEntry(C1, C2, s, c) for s, c in sorted(counts.items()) if c >= 2]


def ip_lower_bound(spec: GraphSpec) -> int:
    return sum(e.count - 1 for e in identical_path_set(spec))


def _hit_paths(W: Iterable[Vertex]) -> set[int]:
    return {w.path for w in W if not w.is_center}


def check_ip_internal_vertex_condition(spec: GraphSpec, W: Sequence[Vertex]) -> bool:
    """Each identical-path bundle of size c has >= c-1 paths with an internal landmark."""
    hit = _hit_paths(landmark_set(spec, W))
    for e in identical_path_set(spec):
        paths = [i for i, s in enumerate(spec.lengths, start=1) if s == e.s]
        if sum(i in hit for i in paths) < e.count - 1:
            return False
    return True


def check_twin_path_lemma(spec: GraphSpec, W: Sequence[Vertex]) -> tuple[Vertex, Vertex] | None:
    """Forced collision from two equal-length paths with no internal landmark."""
    hit = _hit_paths(landmark_set(spec, W))
    for i, l in combinations(range(1, spec.m + 1), 2):
        if spec.s(i) == spec.s(l) and i not in hit and l not in hit:
            return Vertex(i, 1), Vertex(l, 1)
    return None


def check_generalized_twin_lemma(spec: GraphSpec, pair: tuple[int, int], W: Sequence[Vertex]) -> bool:
    """True when paths ``pair`` are landmark-free and both longer than d(c1,c2)+1."""
    i, l = pair
    if i == l:
        raise SpecError("the two paths must differ")
    for p in pair:
        if not 1 <= p <= spec.m:
            raise SpecError(f"path {p} is not in {spec}")
    hit = _hit_paths(landmark_set(spec, W))
    if i in hit or l in hit:
        return False
    d12 = spec.lengths[0] + 1
    return d12 + 2 < spec.s(i) + 2 and d12 + 2 < spec.s(l) + 2


def closer_center(spec: GraphSpec, u: Vertex) -> int:
    """1 if ``u`` is at least as close to c1 as to c2, else 2."""
    dist = distance_matrix(spec)
    idx = spec.index
    x = idx[spec.check(u)]
    return 1 if dist[x, idx[C1]] <= dist[x, idx[C2]] else 2


# ---------------------------------------------------------------------------
# metric-basis conditions for dimension-2 graphs

@dataclass(frozen=True)
class KhullerReport:
    shortest_paths: int
    unique_shortest_path: bool
    degrees_ok: bool
    interior_degrees_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.unique_shortest_path and self.degrees_ok and self.interior_degrees_ok


def count_shortest_paths(spec: GraphSpec, a: Vertex, b: Vertex) -> int:
    dist = distance_matrix(spec)
    adj = edge_list(spec)
    xa, xb = spec.index[a], spec.index[b]
    order = sorted(range(spec.n), key=lambda x: dist[xa, x])
    ways = [0] * spec.n
    ways[xa] = 1
    for x in order:
        if x == xa:
            continue
        ways[x] = sum(ways[y] for y in adj[x] if dist[xa, y] == dist[xa, x] - 1)
    return ways[xb]


def khuller_conditions(spec: GraphSpec, basis: Sequence[Vertex]) -> KhullerReport:
    basis = landmark_set(spec, basis)
    if len(basis) != 2:
        raise SpecError("Khuller conditions need exactly two landmarks")
    if not is_resolving(spec, basis):
        raise SpecError(f"{[str(w) for w in basis]} does not resolve {spec}")
    a, b = basis
    dist = distance_matrix(spec)
    idx = spec.index
    xa, xb = idx[a], idx[b]
    interior = [
        u for u in spec.vertices
        if u not in basis and dist[xa, idx[u]] + dist[idx[u], xb] == dist[xa, xb]
    ]
    paths = count_shortest_paths(spec, a, b)
    return KhullerReport(
        shortest_paths=paths,
        unique_shortest_path=paths == 1,
        degrees_ok=degree(spec, a) <= 3 and degree(spec, b) <= 3,
        interior_degrees_ok=all(degree(spec, u) <= 5 for u in interior),
    )
