import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from metriclines import (
    AnchoredPoset,
    BetweennessRelation,
    anchored_poset,
    dilworth_decompose,
    enumerate_pseudometric_betweennesses,
    fact_consequences,
    gen_complete,
    gen_cycle,
    gen_path,
    graph_metric,
    induced_betweenness,
    is_geodesic_sequence,
    is_geodesic_set,
    longest_chain,
    longest_geodesic,
    maximum_antichain,
    random_metric,
    validate_axioms,
)
from metriclines.errors import (
    DuplicateInSequence,
    M0Violation,
    M2Violation,
    M3Violation,
    NTooLarge,
)

P4 = graph_metric(gen_path(4))
C4 = graph_metric(gen_cycle(4))
C5 = graph_metric(gen_cycle(5))
C6 = graph_metric(gen_cycle(6))
K4 = graph_metric(gen_complete(4))


def test_validate_axioms_examples():
    assert len(validate_axioms([], 5)) == 0
    with pytest.raises(M2Violation) as exc:
        validate_axioms([(0, 1, 2), (2, 1, 0), (1, 0, 2), (2, 0, 1)], 3)
    assert exc.value.points == (0, 1, 2)
    with pytest.raises(M0Violation):
        validate_axioms([(0, 0, 1)], 3)
    # [012] and [023] without [013]
    with pytest.raises(M3Violation):
        validate_axioms([(0, 1, 2), (0, 2, 3)], 4)
    rel = validate_axioms(induced_betweenness(graph_metric(gen_path(5))).triples, 5)
    assert len(rel) == 10


def test_relation_reversal_is_structural():
    rel = BetweennessRelation(3, [(2, 1, 0)])
    assert rel.between(0, 1, 2) and rel.between(2, 1, 0)
    assert rel == BetweennessRelation(3, [(0, 1, 2)])
    assert BetweennessRelation.from_json(rel.to_json()) == rel


def test_fact_consequences_examples():
    for m in (P4, C6):
        assert fact_consequences(induced_betweenness(m)).ok
    assert fact_consequences(BetweennessRelation(4)).ok


def test_geodesic_sequence():
    assert is_geodesic_sequence(P4, (0, 1, 2, 3))
    assert not is_geodesic_sequence(C5, (0, 1, 2, 3))
    assert is_geodesic_sequence(P4, (3, 2, 1, 0))
    assert is_geodesic_sequence(K4, (0, 1))
    with pytest.raises(DuplicateInSequence):
        is_geodesic_sequence(P4, (0, 1, 0))


def test_geodesic_set():
    assert is_geodesic_set(P4, {3, 1, 0, 2}) == (0, 1, 2, 3)
    assert is_geodesic_set(C4, {0, 1, 2, 3}) is None
    assert is_geodesic_set(C5, {0, 1, 2}) == (0, 1, 2)


def test_geodesic_set_agrees_with_permutations():
    rng = random.Random(11)
    for _ in range(40):
        m = random_metric(rng.randint(3, 7), 4, rng)
        for k in (3, 4):
            for pts in itertools.combinations(range(m.n), k):
                found = is_geodesic_set(m, pts)
                any_order = any(is_geodesic_sequence(m, p) for p in itertools.permutations(pts))
                assert (found is not None) == any_order
                if found is not None:
                    assert is_geodesic_sequence(m, found)


def _brute_longest_geodesic(m) -> int:
    best = 2 if m.n >= 2 else m.n
    for k in range(3, m.n + 1):
        if any(is_geodesic_sequence(m, p) for p in itertools.permutations(range(m.n), k)):
            best = k
    return best


def test_longest_geodesic_examples():
    assert longest_geodesic(graph_metric(gen_path(6))) in ((0, 1, 2, 3, 4, 5), (5, 4, 3, 2, 1, 0))
    assert len(longest_geodesic(K4)) == 2
    geo = longest_geodesic(C6)
    assert len(geo) == 4 and is_geodesic_sequence(C6, geo)


def test_longest_geodesic_brute_force():
    rng = random.Random(12)
    for _ in range(60):
        m = random_metric(rng.randint(2, 6), 3, rng)
        geo = longest_geodesic(m)
        assert is_geodesic_sequence(m, geo)
        assert len(geo) == _brute_longest_geodesic(m)


def test_anchored_poset_examples():
    p = anchored_poset(P4, 0)
    assert longest_chain(p) == [1, 2, 3]
    p = anchored_poset(K4, 2)
    assert not p.less.any() and len(maximum_antichain(p)) == 3
    p = anchored_poset(C5, 0)
    pairs = {(p.ground[i], p.ground[j]) for i, j in np.argwhere(p.less)}
    assert pairs == {(1, 2), (4, 3)}


def _poset(less) -> AnchoredPoset:
    less = np.array(less, dtype=bool)
    return AnchoredPoset(-1, tuple(range(len(less))), less)


def test_dilworth_small_orders():
    total = [[i < j for j in range(4)] for i in range(4)]
    chain, anti = dilworth_decompose(_poset(total))
    assert len(chain) == 4 and len(anti) == 1
    empty = [[False] * 4 for _ in range(4)]
    chain, anti = dilworth_decompose(_poset(empty))
    assert len(chain) == 1 and anti == (0, 1, 2, 3)
    two = np.zeros((4, 4), dtype=bool)
    two[0, 1] = two[2, 3] = True
    chain, anti = dilworth_decompose(_poset(two))
    assert chain == [0, 1] and len(anti) == 2


def _random_order(rng: random.Random, m: int, p: float) -> np.ndarray:
    # random DAG on a hidden permutation, then transitive closure
    perm = list(range(m))
    rng.shuffle(perm)
    less = np.zeros((m, m), dtype=bool)
    for i, j in itertools.combinations(range(m), 2):
        if rng.random() < p:
            less[perm[i], perm[j]] = True
    for k in range(m):
        less |= less[:, [k]] & less[[k], :]
    return less


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 9), st.floats(0.0, 0.7), st.integers(0, 2**32 - 1))
def test_chain_and_antichain_are_maximum(m, p, seed):
    less = _random_order(random.Random(seed), m, p)
    poset = _poset(less)
    chain = longest_chain(poset)
    anti = maximum_antichain(poset)
    assert all(less[a, b] for a, b in zip(chain, chain[1:]))
    assert not any(less[a, b] for a in anti for b in anti)
    best_chain = best_anti = 1
    for k in range(2, m + 1):
        for sub in itertools.combinations(range(m), k):
            sub_less = less[np.ix_(sub, sub)]
            comparable = (sub_less | sub_less.T).sum()
            if comparable == k * (k - 1):
                best_chain = max(best_chain, k)
            if comparable == 0:
                best_anti = max(best_anti, k)
    assert len(chain) == best_chain
    assert len(anti) == best_anti
    assert max(len(chain), len(anti)) ** 2 >= m


def test_longest_chain_is_lexicographically_least():
    rng = random.Random(13)
    for _ in range(50):
        m = rng.randint(1, 8)
        less = _random_order(rng, m, 0.4)
        chain = longest_chain(_poset(less))
        chains = [list(c) for k in range(1, m + 1) for c in itertools.permutations(range(m), k)
                  if all(less[a, b] for a, b in zip(c, c[1:]))]
        best = max(len(c) for c in chains)
        assert chain == min(c for c in chains if len(c) == best)


def test_enumeration_small_counts():
    assert len(list(enumerate_pseudometric_betweennesses(2))) == 1
    rels = list(enumerate_pseudometric_betweennesses(3))
    assert len(rels) == 4
    assert sorted(len(r) for r in rels) == [0, 1, 1, 1]
    with pytest.raises(NTooLarge):
        next(enumerate_pseudometric_betweennesses(6))


def test_enumeration_n4_matches_direct_validation():
    # every assignment of at most one middle per 3-set, checked with validate_axioms
    triples = list(itertools.combinations(range(4), 3))
    valid = set()
    for mids in itertools.product(*[(None,) + t for t in triples]):
        chosen = [(min(set(t) - {mid}), mid, max(set(t) - {mid}))
                  for t, mid in zip(triples, mids) if mid is not None]
        try:
            valid.add(validate_axioms(chosen, 4))
        except M3Violation:
            pass
    assert set(enumerate_pseudometric_betweennesses(4)) == valid
