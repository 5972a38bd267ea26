"""Metric facts about plain cycles ``C_n`` on vertices ``0..n-1``.

Cycles appear natively here (index arithmetic) and as the degenerate theta
graph ``theta:s1,s2`` with ``s1 + s2 + 2 = n``; :func:`theta_cycle_labels`
maps between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .model import C1, C2, GraphSpec, SpecError, Vertex


def _check(n: int, *ws: int) -> None:
    if n < 3:
        raise SpecError(f"a cycle needs at least 3 vertices, got {n}")
    for w in ws:
        if not 0 <= w < n:
            raise SpecError(f"vertex {w} is not in C_{n}")


def cycle_distance(n: int, a: int, b: int) -> int:
    gap = abs(a - b) % n
    return min(gap, n - gap)


def cycle_vector(n: int, W: tuple[int, ...], x: int) -> tuple[int, ...]:
    return tuple(cycle_distance(n, w, x) for w in W)


def cycle_mmd_set(n: int, u: int) -> frozenset[int]:
    """Vertices mutually maximally distant from ``u`` in ``C_n``."""
    _check(n, u)

    def md(a, b):
        d = cycle_distance(n, a, b)
        return all(cycle_distance(n, y, b) <= d for y in ((a - 1) % n, (a + 1) % n))

    return frozenset(x for x in range(n) if x != u and md(x, u) and md(u, x))


@dataclass(frozen=True)
class AntipodalStructure:
    antipode: int
    equidistant_pairs: tuple[tuple[int, int], ...]


def cycle_antipodal_structure(n: int, u: int) -> AntipodalStructure:
    """Antipode of ``u`` in an even cycle, and the pair at each smaller radius.

    ``n`` is the vertex count itself, so the antipode is ``u + n/2``.
    """
    _check(n, u)
    if n % 2:
        raise SpecError(f"C_{n} is odd: no antipode")
    pairs = tuple(tuple(sorted(((u + i) % n, (u - i) % n))) for i in range(1, n // 2))
    return AntipodalStructure((u + n // 2) % n, pairs)


def cycle_pair_resolves(n: int, w1: int, w2: int) -> bool:
    """Direct check that ``{w1, w2}`` gives every vertex a distinct vector."""
    _check(n, w1, w2)
    if w1 == w2:
        raise SpecError("the two landmarks must differ")
    seen = {cycle_vector(n, (w1, w2), x) for x in range(n)}
    return len(seen) == n


def equal_coordinate_vertices(n: int, w1: int, w2: int) -> list[int]:
    """Vertices whose vector against ``(w1, w2)`` has the form ``(i, i)``."""
    return [x for x in range(n) if cycle_distance(n, w1, x) == cycle_distance(n, w2, x)]


def cycle_double_place_criterion(n: int, w1: int, w2: int) -> bool:
    """Whether three distinct vertices have equal-coordinate vectors ``(i, i)``."""
    if n < 6:
        raise SpecError(f"the double-place criterion needs n >= 6, got {n}")
    _check(n, w1, w2)
    if w1 == w2:
        raise SpecError("the two landmarks must differ")
    return len(equal_coordinate_vertices(n, w1, w2)) >= 3


def cycle_landmark_pairs(n: int):
    return combinations(range(n), 2)


def theta_cycle_labels(spec: GraphSpec) -> dict[Vertex, int]:
    """Walk c1 -> path 1 -> c2 -> path 2 (backwards) and number the vertices."""
    if not spec.is_cycle:
        raise SpecError(f"{spec} is not a cycle")
    s1, s2 = spec.lengths
    labels = {C1: 0, C2: s1 + 1}
    for j in range(1, s1 + 1):
        labels[Vertex(1, j)] = j
    for j in range(1, s2 + 1):
        labels[Vertex(2, j)] = spec.n - j
    return labels


def _native_beta(n: int) -> int:
    for k in range(1, n + 1):
        for W in combinations(range(n), k):
            if len({cycle_vector(n, W, x) for x in range(n)}) == n:
                return k
    raise AssertionError("unreachable: the full vertex set resolves")


@dataclass(frozen=True)
class CycleCheck:
    name: str
    ok: bool
    cases: int
    failures: tuple = ()


def check_cycle_propositions(min_n: int = 3, max_n: int = 24) -> list[CycleCheck]:
    """Exhaustive checks of the cycle facts for every ``C_n`` in the range."""
    from .model import distance_matrix
    from .resolving import metric_dimension

    antipodal, mmd_char, odd, double, beta, labels = [], [], [], [], [], []
    counts = dict.fromkeys(("antipodal", "mmd", "odd", "double", "beta", "labels"), 0)
    for n in range(min_n, max_n + 1):
        if n % 2 == 0:
            for u in range(n):
                counts["antipodal"] += 1
                st = cycle_antipodal_structure(n, u)
                far = [x for x in range(n) if cycle_distance(n, u, x) == n // 2]
                layers_ok = all(
                    sorted(x for x in range(n) if cycle_distance(n, u, x) == i) == list(pair)
                    for i, pair in enumerate(st.equidistant_pairs, start=1)
                )
                if far != [st.antipode] or not layers_ok:
                    antipodal.append((n, u))
        for w1, w2 in cycle_landmark_pairs(n):
            counts["mmd"] += 1
            resolves = cycle_pair_resolves(n, w1, w2)
            stuck = cycle_mmd_set(n, w1) == {w2} and cycle_mmd_set(n, w2) == {w1}
            if resolves == stuck:
                mmd_char.append((n, w1, w2))
            if n % 2:
                counts["odd"] += 1
                if not resolves:
                    odd.append((n, w1, w2))
            if n >= 6:
                counts["double"] += 1
                if cycle_double_place_criterion(n, w1, w2) != (not resolves):
                    double.append((n, w1, w2))
        counts["beta"] += 1
        if _native_beta(n) != 2:
            beta.append((n, "native"))
        for s1 in range(1, (n - 2) // 2 + 1):
            spec = GraphSpec((s1, n - 2 - s1))
            counts["beta"] += 1
            if metric_dimension(spec).beta != 2:
                beta.append((n, spec.lengths))
            counts["labels"] += 1
            lab = theta_cycle_labels(spec)
            dist = distance_matrix(spec)
            idx = spec.index
            if any(dist[idx[a], idx[b]] != cycle_distance(n, lab[a], lab[b]) for a in lab for b in lab):
                labels.append(spec.lengths)
    out = [
        ("antipode_unique", antipodal, "antipodal"),
        ("pair_fails_iff_mutual_mmd", mmd_char, "mmd"),
        ("odd_cycle_any_pair_resolves", odd, "odd"),
        ("double_place_iff_not_resolving", double, "double"),
        ("beta_equals_2", beta, "beta"),
        ("theta_cycle_matches_native", labels, "labels"),
    ]
    return [CycleCheck(name, not bad, counts[key], tuple(bad)) for name, bad, key in out]
