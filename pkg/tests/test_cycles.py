import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from thetadim.cycles import (
    check_cycle_propositions,
    cycle_antipodal_structure,
    cycle_distance,
    cycle_double_place_criterion,
    cycle_mmd_set,
    cycle_pair_resolves,
    equal_coordinate_vertices,
    theta_cycle_labels,
)
from thetadim.model import SpecError, build_spec, distance


def test_antipodal_examples():
    st6 = cycle_antipodal_structure(6, 0)
    assert st6.antipode == 3 and st6.equidistant_pairs == ((1, 5), (2, 4))
    assert cycle_antipodal_structure(4, 2).antipode == 0


def test_antipode_unique_on_c10():
    for u in range(10):
        far = [x for x in range(10) if oracles.cycle_dist(10, u, x) == 5]
        assert far == [cycle_antipodal_structure(10, u).antipode]


def test_antipodal_rejects_odd_and_bad_vertex():
    with pytest.raises(SpecError):
        cycle_antipodal_structure(7, 0)
    with pytest.raises(SpecError):
        cycle_antipodal_structure(6, 6)


def test_pair_examples():
    assert not cycle_pair_resolves(6, 0, 3)
    assert all(cycle_pair_resolves(7, a, b) for a in range(7) for b in range(a + 1, 7))
    assert cycle_pair_resolves(8, 0, 1)
    with pytest.raises(SpecError):
        cycle_pair_resolves(8, 2, 2)


@given(st.integers(3, 30).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1), st.integers(0, n - 1))))
def test_pair_resolves_matches_oracle(case):
    n, a, b = case
    if a == b:
        return
    g = nx.cycle_graph(n)
    d = dict(nx.all_pairs_shortest_path_length(g))
    vectors = {(d[a][x], d[b][x]) for x in g}
    assert cycle_pair_resolves(n, a, b) == (len(vectors) == n)
    assert cycle_distance(n, a, b) == d[a][b]


@given(st.integers(3, 30).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1))))
def test_mmd_set_on_cycles(case):
    n, u = case
    expected = {(u + n // 2) % n} if n % 2 == 0 else {(u + n // 2) % n, (u - n // 2) % n}
    assert cycle_mmd_set(n, u) == expected


def test_double_place_examples():
    # antipodal landmarks on C8: only 2 and 6 are equidistant from 0 and 4
    assert equal_coordinate_vertices(8, 0, 4) == [2, 6]
    assert [x for x in range(8) if oracles.cycle_dist(8, 0, x) == oracles.cycle_dist(8, 4, x)] == [2, 6]
    assert not cycle_double_place_criterion(8, 0, 4)
    assert not cycle_double_place_criterion(8, 0, 1)
    assert not any(cycle_double_place_criterion(7, a, b) for a in range(7) for b in range(a + 1, 7))
    with pytest.raises(SpecError):
        cycle_double_place_criterion(5, 0, 1)


@pytest.mark.parametrize("n", range(6, 25))
def test_equal_coordinate_vertices_never_exceed_two(n):
    for a in range(n):
        for b in range(a + 1, n):
            assert len(equal_coordinate_vertices(n, a, b)) <= 2


@pytest.mark.parametrize("raw", [[1, 1], [1, 2], [2, 5], [3, 3], [4, 7]])
def test_theta_cycle_labels_preserve_distance(raw):
    spec = build_spec(raw)
    labels = theta_cycle_labels(spec)
    assert sorted(labels.values()) == list(range(spec.n))
    for a in spec.vertices:
        for b in spec.vertices:
            assert distance(spec, a, b) == cycle_distance(spec.n, labels[a], labels[b])
    with pytest.raises(SpecError):
        theta_cycle_labels(build_spec([1, 1, 1]))


def test_proposition_checks():
    checks = {c.name: c for c in check_cycle_propositions(3, 24)}
    assert set(checks) == {
        "antipode_unique", "pair_fails_iff_mutual_mmd", "odd_cycle_any_pair_resolves",
        "double_place_iff_not_resolving", "beta_equals_2", "theta_cycle_matches_native",
    }
    for name, c in checks.items():
        if name != "double_place_iff_not_resolving":
            assert c.ok and c.cases > 0 and not c.failures, name
    # the equivalence breaks on exactly the antipodal pairs of every even cycle
    failing = set(checks["double_place_iff_not_resolving"].failures)
    antipodal = {(n, a, a + n // 2) for n in range(6, 25, 2) for a in range(n // 2)}
    assert failing == antipodal
