"""Closed-form metric dimension predictions and explicit resolving sets.

Every known result about generalized theta graphs is registered as a
:class:`Theorem`: a predicate over the sorted length vector, the value or
interval it asserts, and (where the result is constructive) a builder for the
landmark set that realizes the upper value.  :func:`predict_beta` picks the
most specific applicable exact result, falling back to the intersection of
every applicable bound.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass
from math import ceil, floor

from .model import C1, GraphSpec, SpecError, Vertex


class ConstructionError(SpecError):
    """The spec does not match a construction's pattern, or an index left range."""


Landmarks = tuple[Vertex, ...]


@dataclass(frozen=True)
class BetaPrediction:
    lo: int
    hi: int
    theorem_id: str
    witness: Landmarks | None = None

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")
        if self.witness is not None and len(self.witness) != self.hi:
            raise ValueError(f"{self.theorem_id}: witness size {len(self.witness)} != {self.hi}")

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def kind(self) -> str:
        return "exact" if self.is_exact else "interval"

    @property
    def value(self) -> int | None:
        return self.lo if self.is_exact else None

    def contains(self, beta: int) -> bool:
        return self.lo <= beta <= self.hi

    def __str__(self) -> str:
        return str(self.lo) if self.is_exact else f"[{self.lo},{self.hi}]"


def _vertex(spec: GraphSpec, i: int, j: int) -> Vertex:
    if not 1 <= j <= spec.s(i):
        raise ConstructionError(f"position {j} is outside path {i} of {spec}")
    return Vertex(i, j)


def _lead_count(spec: GraphSpec) -> int:
    """How many paths share the smallest length."""
    return Counter(spec.lengths)[spec.lengths[0]]


def _is_uniform(spec: GraphSpec) -> bool:
    return len(set(spec.lengths)) == 1


def _require(cond: bool, spec: GraphSpec, what: str) -> None:
    if not cond:
        raise ConstructionError(f"{spec} does not match {what}")


# ---------------------------------------------------------------------------
# constructions

def construct_upper_bound_general(spec: GraphSpec) -> Landmarks:
    """c1 plus the middle-ish vertex of every path but the first (size m)."""
    _require(spec.m >= 3, spec, "m >= 3")
    return (C1,) + tuple(_vertex(spec, i, ceil(spec.s(i) / 2)) for i in range(2, spec.m + 1))


def matches_s1_pow_m2_s2_s3(spec: GraphSpec) -> bool:
    return spec.m >= 4 and _lead_count(spec) == spec.m - 2


def construct_s1_pow_m2_s2_s3(spec: GraphSpec) -> Landmarks:
    _require(matches_s1_pow_m2_s2_s3(spec), spec, "Θ(s1^(m-2), s2, s3) with s1 < s2 <= s3")
    m, s1 = spec.m, spec.lengths[0]
    W = [_vertex(spec, i, ceil(s1 / 2)) for i in range(1, m - 2)]
    for j in (m - 1, m):
        gamma = (spec.s(j) + s1 + 2) // 2
        W.append(_vertex(spec, j, gamma))
    return tuple(W)


def matches_s1_pow_m1_s2(spec: GraphSpec) -> bool:
    return spec.m >= 4 and _lead_count(spec) == spec.m - 1


def is_one_different_exception(spec: GraphSpec) -> bool:
    """Θ(1^(m-1), 3) or Θ(2^3, 4): the one-longer-path graphs needing m landmarks."""
    if not matches_s1_pow_m1_s2(spec):
        return False
    s1, top = spec.lengths[0], spec.lengths[-1]
    return (s1 == 1 and top == 3) or spec.lengths == (2, 2, 2, 4)


def construct_s1_pow_m1_s2(spec: GraphSpec) -> Landmarks:
    _require(matches_s1_pow_m1_s2(spec), spec, "Θ(s1^(m-1), s2) with s2 > s1")
    m, s1 = spec.m, spec.lengths[0]
    if is_one_different_exception(spec):
        return construct_upper_bound_general(spec)
    if s1 == 2 and m >= 5:
        k = (m - 1) // 2
        return tuple(_vertex(spec, i, 1 if i <= k else 2) for i in range(1, m))
    if s1 <= 2:
        return tuple(_vertex(spec, i, 1) for i in range(1, m - 1)) + (_vertex(spec, m, 1),)
    return tuple(_vertex(spec, i, 1) for i in range(1, m - 1)) + (_vertex(spec, m - 1, 2),)


def matches_s1_s2_pow_m1(spec: GraphSpec) -> bool:
    L = spec.lengths
    return spec.m >= 4 and L[0] < L[1] and len(set(L[1:])) == 1


def construct_s1_s2_pow_m1(spec: GraphSpec) -> Landmarks:
    _require(matches_s1_s2_pow_m1(spec), spec, "Θ(s1, s2^(m-1)) with s1 < s2")
    s1, s2 = spec.lengths[0], spec.lengths[1]
    gamma = (s1 + s2) // 2 + 1
    return (C1,) + tuple(_vertex(spec, i, gamma) for i in range(2, spec.m))


def _mu(spec: GraphSpec, i: int, rounding) -> int:
    s1, si = spec.lengths[0], spec.s(i)
    half = rounding((si + s1 + 2) / 2)
    return half if i % 2 == 0 else si + 1 - half


def matches_distinct(spec: GraphSpec) -> bool:
    return spec.m > 5 and len(set(spec.lengths)) == spec.m


def construct_distinct(spec: GraphSpec) -> Landmarks:
    """Alternating-side landmarks on paths 3..m (size m-2)."""
    _require(matches_distinct(spec), spec, "pairwise distinct lengths with m > 5")
    return tuple(_vertex(spec, i, _mu(spec, i, floor)) for i in range(3, spec.m + 1))


def matches_consecutive(spec: GraphSpec) -> bool:
    L = spec.lengths
    return spec.m > 6 and all(b == a + 1 for a, b in zip(L, L[1:]))


def construct_consecutive(spec: GraphSpec) -> Landmarks:
    """Alternating-side landmarks on paths 4..m (size m-3)."""
    _require(matches_consecutive(spec), spec, "consecutive lengths with m > 6")
    return tuple(_vertex(spec, i, _mu(spec, i, ceil)) for i in range(4, spec.m + 1))


def uniform_beta(spec: GraphSpec) -> int:
    m, s = spec.m, spec.lengths[0]
    if (m >= 5 and s >= 2) or (m == 4 and s > 2):
        return m - 1
    return m


def construct_uniform(spec: GraphSpec) -> Landmarks:
    _require(_is_uniform(spec) and spec.m >= 3, spec, "a uniform Θ(s^m) with m >= 3")
    m, s = spec.m, spec.lengths[0]
    if uniform_beta(spec) == m:
        return construct_upper_bound_general(spec)
    if s == 2:
        k = (m + 1) // 2
        if m - 1 - k < 2:
            # the position-2 landmarks need at least two paths; at m = 5 the
            # (m+1)//2 split leaves one and c2 collides with v_{4,1}
            k = (m - 1) // 2
        return tuple(_vertex(spec, i, 1 if i <= k else 2) for i in range(1, m))
    return tuple(_vertex(spec, i, 1) for i in range(1, m - 1)) + (_vertex(spec, m - 1, 2),)


def theta3_beta(spec: GraphSpec) -> int:
    a, b, c = spec.lengths
    return 3 if a == b == c or (a == b and c == a + 2) else 2


def construct_theta3(spec: GraphSpec) -> BetaPrediction:
    _require(spec.m == 3, spec, "multiplicity 3")
    s1, s2, s3 = spec.lengths
    beta = theta3_beta(spec)
    if beta == 3:
        W = construct_upper_bound_general(spec)
    elif len({s % 2 for s in spec.lengths}) == 2:
        odd = next(i for i in (1, 2, 3) if spec.s(i) % 2)
        even = next(i for i in (1, 2, 3) if spec.s(i) % 2 == 0)
        W = (_vertex(spec, odd, ceil(spec.s(odd) / 2)), _vertex(spec, even, spec.s(even) // 2))
    elif s1 < s2:
        W = tuple(_vertex(spec, i, (s1 + spec.s(i) + 2) // 2) for i in (2, 3))
    else:
        W = (_vertex(spec, 2, 1), _vertex(spec, 3, 1))
    return BetaPrediction(beta, beta, "thm:GTGEndResult", W)


FOUR_EXCEPTIONS = ((1, 1, 1, 1), (1, 1, 1, 3), (2, 2, 2, 2), (2, 2, 2, 4))


def theta4_beta(spec: GraphSpec) -> int:
    s1, s2, s3, s4 = spec.lengths
    if spec.lengths in FOUR_EXCEPTIONS:
        return 4
    if s2 == s1 + 1 and (s2 == s3 and s4 >= s1 + 4 or s2 < s3):
        return 2
    return 3


def _center_gamma_set(spec: GraphSpec) -> Landmarks:
    s1 = spec.lengths[0]
    return (C1,) + tuple(_vertex(spec, i, (s1 + spec.s(i) + 2) // 2) for i in (3, 4))


def construct_theta4(spec: GraphSpec) -> BetaPrediction:
    _require(spec.m == 4, spec, "multiplicity 4")
    s1, s2, s3, s4 = spec.lengths
    beta = theta4_beta(spec)
    if beta == 4:
        W = construct_upper_bound_general(spec)
    elif beta == 2 and s2 == s3:
        W = (_vertex(spec, 3, 1), _vertex(spec, 4, s4))
    elif beta == 2:
        W = (_vertex(spec, 3, 1), _vertex(spec, 3, (s2 + s3 + 2) // 2))
    elif s1 + 1 < s2 or (s1 + 1 == s2 == s3 and s4 - s1 in (2, 3)):
        W = _center_gamma_set(spec)
    elif matches_s1_s2_pow_m1(spec):
        W = construct_s1_s2_pow_m1(spec)
    elif _is_uniform(spec):
        W = construct_uniform(spec)
    elif matches_s1_pow_m1_s2(spec):
        W = construct_s1_pow_m1_s2(spec)
    else:
        W = construct_s1_pow_m2_s2_s3(spec)
    return BetaPrediction(beta, beta, "thm:Multiplicity4Summary", W)


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    description: str
    matches: Callable[[GraphSpec], bool]
    bounds: Callable[[GraphSpec], tuple[int, int]]
    witness: Callable[[GraphSpec], Landmarks] | None = None
    exact: bool = False

    def predict(self, spec: GraphSpec) -> BetaPrediction:
        lo, hi = self.bounds(spec)
        W = self.witness(spec) if self.witness is not None else None
        return BetaPrediction(lo, hi, self.theorem_id, W)


@dataclass(frozen=True)
class TheoremApplicability:
    theorem_id: str
    description: str
    matched: bool


def _exact(value: Callable[[GraphSpec], int]):
    return lambda spec: (value(spec), value(spec))


def _lower(value: Callable[[GraphSpec], int]):
    return lambda spec: (value(spec), spec.n - 1)


def _upper(value: Callable[[GraphSpec], int]):
    return lambda spec: (1, value(spec))


def _theta4_case(pred):
    return lambda spec: spec.m == 4 and pred(*spec.lengths)


def _ip_sum(spec: GraphSpec) -> int:
    return sum(c - 1 for c in Counter(spec.lengths).values())


def _two_bundles(spec: GraphSpec) -> bool:
    counts = Counter(spec.lengths)
    return len(counts) == 2 and min(counts.values()) >= 2


def _gap_two(spec: GraphSpec) -> bool:
    L = spec.lengths
    return spec.m > 5 and all(b - a >= 2 for a, b in zip(L, L[1:]))


def _cycle_witness(spec: GraphSpec) -> Landmarks:
    return (C1, _vertex(spec, 2, ceil(spec.s(2) / 2)))


# Exact results, most specific first; the first match drives predict_beta.
EXACT_THEOREMS: tuple[Theorem, ...] = (
    Theorem("cycle", "m = 2: the cycle C_(s1+s2+2)",
            lambda s: s.m == 2, _exact(lambda s: 2), _cycle_witness, exact=True),
    Theorem("thm:GTGEndResult", "m = 3 theta graph",
            lambda s: s.m == 3, _exact(theta3_beta), lambda s: construct_theta3(s).witness, exact=True),
    Theorem("thm:UGTG1^m", "Θ(1^m), m >= 3",
            lambda s: s.m >= 3 and _is_uniform(s) and s.lengths[0] == 1,
            _exact(lambda s: s.m), construct_uniform, exact=True),
    Theorem("thm:UGTG2^m", "Θ(2^m), m >= 3",
            lambda s: s.m >= 3 and _is_uniform(s) and s.lengths[0] == 2,
            _exact(uniform_beta), construct_uniform, exact=True),
    Theorem("thm:Uniform Theta Proof", "Θ(s^m), m >= 3",
            lambda s: s.m >= 3 and _is_uniform(s), _exact(uniform_beta), construct_uniform, exact=True),
    Theorem("thm:onedifferents1>s2", "Θ(s1^(m-1), s2), s2 > s1, m >= 4",
            matches_s1_pow_m1_s2,
            _exact(lambda s: s.m if is_one_different_exception(s) else s.m - 1),
            construct_s1_pow_m1_s2, exact=True),
    Theorem("thm:s^m-2,s2,s3", "Θ(s1^(m-2), s2, s3), s1 < s2 <= s3, m >= 4",
            matches_s1_pow_m2_s2_s3, _exact(lambda s: s.m - 1), construct_s1_pow_m2_s2_s3, exact=True),
    Theorem("thm:MD43same1dif", "m = 4, s1 < s2 = s3 = s4",
            _theta4_case(lambda a, b, c, d: a < b == c == d), _exact(lambda s: 3),
            construct_s1_s2_pow_m1, exact=True),
    Theorem("thm:4,s1+1<s2sup", "m = 4, s1 + 1 < s2",
            _theta4_case(lambda a, b, c, d: a + 1 < b), _exact(lambda s: 3), _center_gamma_set, exact=True),
    Theorem("thm:4,s1+1=s2=s3,s4-s1in{2,3}", "m = 4, s1 + 1 = s2 = s3, s4 - s1 in {2, 3}",
            _theta4_case(lambda a, b, c, d: a + 1 == b == c and d - a in (2, 3)),
            _exact(lambda s: 3), _center_gamma_set, exact=True),
    Theorem("thm:distinct4consecutive", "m = 4, s1 + 1 = s2 = s3, s4 >= s1 + 4",
            _theta4_case(lambda a, b, c, d: a + 1 == b == c and d >= a + 4), _exact(lambda s: 2),
            lambda s: construct_theta4(s).witness, exact=True),
    Theorem("thm:4,s1+1=s2<s3", "m = 4, s1 + 1 = s2 < s3 <= s4",
            _theta4_case(lambda a, b, c, d: a + 1 == b < c), _exact(lambda s: 2),
            lambda s: construct_theta4(s).witness, exact=True),
    Theorem("thm:Multiplicity4Summary", "m = 4 case table",
            lambda s: s.m == 4, _exact(theta4_beta), lambda s: construct_theta4(s).witness, exact=True),
    Theorem("thm:ConsecutiveLengths", "s_(i+1) = s_i + 1, m > 6",
            matches_consecutive, _exact(lambda s: s.m - 3), construct_consecutive, exact=True),
    Theorem("cor:DistinctGap2", "|s_i - s_j| >= 2 for i != j, m > 5",
            _gap_two, _exact(lambda s: s.m - 2), construct_distinct, exact=True),
)

# Bounds, most specific first; used for interval predictions and labelling.
BOUND_THEOREMS: tuple[Theorem, ...] = (
    Theorem("thm:Boundfors2<s1OneDifferent", "Θ(s1, s2^(m-1)), s1 < s2, m >= 4",
            matches_s1_s2_pow_m1, lambda s: (s.m - 2, s.m - 1), construct_s1_s2_pow_m1),
    Theorem("thm:Distinct,si", "pairwise distinct lengths, m > 5",
            matches_distinct, _upper(lambda s: s.m - 2), construct_distinct),
    Theorem("cor:sallbuts2", "Θ(s1^(m-1), s2), s2 > s1, m >= 3",
            lambda s: s.m >= 3 and _lead_count(s) == s.m - 1, _lower(lambda s: s.m - 1)),
    Theorem("cor:biggerThanShortestPaths", "Θ(s1^p, ...), p, q >= 2",
            lambda s: _lead_count(s) >= 2 and s.m - _lead_count(s) >= 2,
            _lower(lambda s: _lead_count(s) + 1)),
    Theorem("cor:s1m1s2m2", "Θ(s1^m1, s2^m2), m1, m2 >= 2",
            _two_bundles, _lower(lambda s: s.m - 2)),
    Theorem("cor:LowerBoundUniform", "Θ(s^m)",
            _is_uniform, _lower(lambda s: s.m - 1)),
    Theorem("thm:IdenticalPathsTheorem", "some length repeats",
            lambda s: _ip_sum(s) > 0, _lower(_ip_sum)),
    Theorem("thm:UpperBoundGTG", "m >= 3",
            lambda s: s.m >= 3, _upper(lambda s: s.m), construct_upper_bound_general),
    Theorem("thm:LowerBoundGTG", "m >= 3",
            lambda s: s.m >= 3, _lower(lambda s: s.m - 3)),
    Theorem("thm:TotalBound", "m >= 2",
            lambda s: True, lambda s: (max(0, s.m - 3), s.m)),
    # only paths have metric dimension 1
    Theorem("fact:NotAPath", "any cycle-containing graph",
            lambda s: True, _lower(lambda s: 2)),
)

ALL_THEOREMS: tuple[Theorem, ...] = EXACT_THEOREMS + BOUND_THEOREMS
THEOREMS_BY_ID = {t.theorem_id: t for t in ALL_THEOREMS}


def applicable_theorems(spec: GraphSpec) -> list[TheoremApplicability]:
    return [TheoremApplicability(t.theorem_id, t.description, bool(t.matches(spec))) for t in ALL_THEOREMS]


def matching_theorems(spec: GraphSpec) -> list[Theorem]:
    return [t for t in ALL_THEOREMS if t.matches(spec)]


def predict_beta(spec: GraphSpec) -> BetaPrediction:
    for t in EXACT_THEOREMS:
        if t.matches(spec):
            return t.predict(spec)
    bounds = [(t, t.bounds(spec)) for t in BOUND_THEOREMS if t.matches(spec)]
    lo = max(b[0] for _, b in bounds)
    hi = min(b[1] for _, b in bounds)
    lo_src = next(t for t, b in bounds if b[0] == lo)
    hi_src = next(t for t, b in bounds if b[1] == hi)
    ids = [lo_src.theorem_id] if lo_src is hi_src else [hi_src.theorem_id, lo_src.theorem_id]
    witness = hi_src.witness(spec) if hi_src.witness is not None else None
    return BetaPrediction(lo, hi, "+".join(ids), witness)


def all_predictions(spec: GraphSpec) -> list[BetaPrediction]:
    """Every applicable theorem's own prediction, for cross-checking."""
    return [t.predict(spec) for t in matching_theorems(spec)]
