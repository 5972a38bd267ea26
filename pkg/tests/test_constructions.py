import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from thetadim.constructions import (
    ALL_THEOREMS,
    EXACT_THEOREMS,
    BetaPrediction,
    ConstructionError,
    applicable_theorems,
    construct_consecutive,
    construct_distinct,
    construct_s1_pow_m1_s2,
    construct_s1_pow_m2_s2_s3,
    construct_s1_s2_pow_m1,
    construct_theta3,
    construct_theta4,
    construct_uniform,
    construct_upper_bound_general,
    matching_theorems,
    predict_beta,
)
from thetadim.model import C1, build_spec, canonical_specs, v
from thetadim.resolving import cached_metric_dimension, has_resolving_set_of_size, is_resolving, verify_resolving


def spec(*raw):
    return build_spec(raw)


# --- BetaPrediction ---------------------------------------------------------

def test_prediction_invariants():
    p = BetaPrediction(3, 3, "x", (C1, v(1, 1), v(2, 1)))
    assert p.is_exact and p.value == 3 and p.kind == "exact" and str(p) == "3"
    q = BetaPrediction(2, 3, "y")
    assert not q.is_exact and q.value is None and str(q) == "[2,3]" and q.contains(2)
    with pytest.raises(ValueError):
        BetaPrediction(3, 2, "z")
    with pytest.raises(ValueError):
        BetaPrediction(2, 3, "z", (C1, v(1, 1)))


# --- dispatcher -------------------------------------------------------------

@pytest.mark.parametrize(
    "raw, value, theorem",
    [
        ((2, 2, 2), 3, "thm:GTGEndResult"),
        ((1, 1, 3), 3, "thm:GTGEndResult"),
        ((1, 2, 3), 2, "thm:GTGEndResult"),
        ((1, 3, 5, 7, 9, 11), 4, "cor:DistinctGap2"),
        ((2, 2, 2, 4), 4, "thm:onedifferents1>s2"),
        ((1, 2, 3, 4, 5, 6, 7), 4, "thm:ConsecutiveLengths"),
        ((1, 1), 2, "cycle"),
    ],
)
def test_predict_beta_examples(raw, value, theorem):
    p = predict_beta(spec(*raw))
    assert p.value == value and p.theorem_id == theorem


def test_distinct_gap_two_is_tight():
    s = spec(1, 3, 5, 7, 9, 11)
    assert is_resolving(s, predict_beta(s).witness)
    assert not has_resolving_set_of_size(s, 3)


def test_interval_fallback():
    p = predict_beta(spec(1, 2, 2, 3, 4))
    assert not p.is_exact
    assert p.lo >= 2 and p.hi <= 5


def test_applicable_theorems_examples():
    ids = lambda *raw: {t.theorem_id for t in matching_theorems(spec(*raw))}
    assert {"thm:onedifferents1>s2", "cor:sallbuts2", "thm:TotalBound"} <= ids(2, 2, 2, 4)
    assert ids(1, 2, 3) - {"thm:UpperBoundGTG", "thm:LowerBoundGTG", "thm:TotalBound", "fact:NotAPath"} == {
        "thm:GTGEndResult"
    }
    assert {"thm:Uniform Theta Proof", "cor:LowerBoundUniform"} <= ids(5, 5, 5, 5, 5)
    table = applicable_theorems(spec(1, 2, 3))
    assert len(table) == len(ALL_THEOREMS)
    assert {a.theorem_id for a in table if a.matched} == ids(1, 2, 3)


@given(st.lists(st.integers(1, 9), min_size=2, max_size=9).map(build_spec))
@settings(max_examples=200)
def test_predictions_are_mutually_consistent(s):
    preds = [t.predict(s) for t in matching_theorems(s)]
    lo = max(p.lo for p in preds)
    hi = min(p.hi for p in preds)
    assert lo <= hi
    exact = {p.value for t, p in zip(matching_theorems(s), preds) if t.exact}
    assert len(exact) <= 1
    best = predict_beta(s)
    assert lo <= best.lo <= best.hi <= hi
    for p in preds:
        if p.witness is not None:
            assert len(p.witness) == p.hi
            assert verify_resolving(s, p.witness).resolved, (s, p.theorem_id)


# --- individual constructions -----------------------------------------------

def test_upper_bound_general():
    assert construct_upper_bound_general(spec(1, 1, 1)) == (C1, v(2, 1), v(3, 1))
    assert construct_upper_bound_general(spec(2, 3, 4)) == (C1, v(2, 2), v(3, 2))
    with pytest.raises(ConstructionError):
        construct_upper_bound_general(spec(2, 3))


@pytest.mark.parametrize("m", range(3, 7))
def test_upper_bound_general_resolves(m):
    for s in canonical_specs(m, 5):
        W = construct_upper_bound_general(s)
        assert len(W) == m and is_resolving(s, W), s


def test_s1_pow_m2_s2_s3():
    s = spec(2, 2, 3, 5)
    W = construct_s1_pow_m2_s2_s3(s)
    assert W == (v(1, 1), v(3, 3), v(4, 4))
    assert is_resolving(s, W) and cached_metric_dimension(s).beta == 3
    s = spec(1, 1, 1, 2, 4)
    W = construct_s1_pow_m2_s2_s3(s)
    assert len(W) == 4 and is_resolving(s, W)
    with pytest.raises(ConstructionError):
        construct_s1_pow_m2_s2_s3(spec(1, 2, 3, 4))


def test_s1_pow_m1_s2():
    assert predict_beta(spec(1, 1, 1, 3)).value == 4
    assert cached_metric_dimension(spec(1, 1, 1, 3)).beta == 4
    assert construct_s1_pow_m1_s2(spec(2, 2, 2, 2, 5)) == (v(1, 1), v(2, 1), v(3, 2), v(4, 2))
    s = spec(3, 3, 3, 7)
    assert construct_s1_pow_m1_s2(s) == (v(1, 1), v(2, 1), v(3, 2))
    assert cached_metric_dimension(s).beta == 3
    with pytest.raises(ConstructionError):
        construct_s1_pow_m1_s2(spec(1, 1, 2, 2))


def test_s1_s2_pow_m1():
    s = spec(1, 3, 3, 3)
    W = construct_s1_s2_pow_m1(s)
    assert W == (C1, v(2, 3), v(3, 3))
    assert is_resolving(s, W)
    assert cached_metric_dimension(s).beta in (2, 3)
    with pytest.raises(ConstructionError):
        construct_s1_s2_pow_m1(spec(3, 3, 3, 3))


def test_distinct():
    s = spec(1, 2, 3, 4, 5, 6)
    W = construct_distinct(s)
    assert W == (v(3, 1), v(4, 3), v(5, 2), v(6, 4))
    assert is_resolving(s, W)
    with pytest.raises(ConstructionError):
        construct_distinct(spec(1, 2, 3, 4, 5))


@pytest.mark.parametrize("m", [6, 7])
def test_distinct_indices_stay_in_range(m):
    for s in canonical_specs(m, 10):
        if len(set(s.lengths)) == m:
            W = construct_distinct(s)
            assert len(W) == m - 2 and is_resolving(s, W), s


def test_consecutive():
    s = spec(1, 2, 3, 4, 5, 6, 7)
    W = construct_consecutive(s)
    assert len(W) == 4 and is_resolving(s, W)
    for start in range(2, 6):
        s = build_spec(range(start, start + 8))
        assert len(construct_consecutive(s)) == 5 and is_resolving(s, construct_consecutive(s))
    with pytest.raises(ConstructionError):
        construct_consecutive(spec(1, 2, 3, 4, 5, 6))


@pytest.mark.parametrize(
    "raw, beta, witness",
    [
        ((1, 1, 1, 1), 4, None),
        ((2, 2, 2, 2), 4, None),
        ((3, 3, 3, 3), 3, (v(1, 1), v(2, 1), v(3, 2))),
    ],
)
def test_uniform_examples(raw, beta, witness):
    s = build_spec(raw)
    W = construct_uniform(s)
    assert len(W) == beta == cached_metric_dimension(s).beta
    assert is_resolving(s, W)
    if witness is not None:
        assert W == witness


@given(st.integers(1, 6), st.integers(3, 9))
@settings(max_examples=60)
def test_uniform_witness_size_and_validity(s_len, m):
    s = build_spec([s_len] * m)
    W = construct_uniform(s)
    assert len(W) == oracles.uniform_formula(s_len, m)
    assert is_resolving(s, W)


def test_literal_two_uniform_formula_breaks_only_at_five():
    """The split at floor((m+1)/2) leaves c2 and v(4,1) together when m = 5."""
    for m in range(5, 10):
        s = build_spec([2] * m)
        literal = [v(i, 1) if i <= (m + 1) // 2 else v(i, 2) for i in range(1, m)]
        verdict = verify_resolving(s, literal)
        if m == 5:
            assert verdict.collision == (s.vertices[1], v(4, 1))
        else:
            assert verdict.resolved
        assert is_resolving(s, construct_uniform(s))


@pytest.mark.parametrize(
    "raw, beta, witness",
    [
        ((1, 2, 2), 2, None),
        ((2, 4, 6), 2, (v(2, 4), v(3, 5))),
        ((2, 2, 6), 2, (v(2, 1), v(3, 1))),
        ((2, 2, 2), 3, None),
        ((1, 1, 3), 3, None),
    ],
)
def test_theta3(raw, beta, witness):
    s = build_spec(raw)
    p = construct_theta3(s)
    assert p.value == beta == cached_metric_dimension(s).beta
    assert is_resolving(s, p.witness)
    if witness is not None:
        assert p.witness == witness


@pytest.mark.parametrize(
    "raw, beta, witness",
    [
        ((1, 2, 2, 5), 2, (v(3, 1), v(4, 5))),
        ((1, 2, 3, 4), 2, None),
        ((2, 2, 4, 4), 3, None),
        ((2, 2, 2, 4), 4, None),
    ],
)
def test_theta4(raw, beta, witness):
    s = build_spec(raw)
    p = construct_theta4(s)
    assert p.value == beta == cached_metric_dimension(s).beta
    assert is_resolving(s, p.witness)
    if witness is not None:
        assert p.witness == witness


def test_theta4_second_two_row_is_labelled():
    assert predict_beta(spec(1, 2, 3, 4)).theorem_id == "thm:4,s1+1=s2<s3"


def test_fixed_arity_builders_reject():
    with pytest.raises(ConstructionError):
        construct_theta3(spec(1, 2, 3, 4))
    with pytest.raises(ConstructionError):
        construct_theta4(spec(1, 2, 3))


@pytest.mark.parametrize("m", range(2, 7))
def test_soundness_over_sweep(m):
    """Exact theorems equal brute force; intervals contain it; witnesses resolve."""
    for s in canonical_specs(m, 5 if m <= 4 else 3):
        beta = cached_metric_dimension(s).beta
        for t in matching_theorems(s):
            p = t.predict(s)
            assert p.contains(beta), (s, t.theorem_id)
            if t.exact:
                assert p.value == beta
            if p.witness is not None:
                assert is_resolving(s, p.witness), (s, t.theorem_id)


def test_exact_registry_ids_unique():
    ids = [t.theorem_id for t in ALL_THEOREMS]
    assert len(ids) == len(set(ids))
    assert all(t.exact for t in EXACT_THEOREMS)
