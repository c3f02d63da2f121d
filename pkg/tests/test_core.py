import pickle
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from cyclicflats import MatroidError, PavingSpec, matroid_from_paving, uniform
from cyclicflats._bits import elements, from_mask, full, to_mask
from cyclicflats.core import binomial, check_paving_spec, count_subsets_by_rank

from corpus import brute_cyclic_flats, brute_flats, corpus, fig1, labelled as P, random_matrix_matroid, \
    rank_axioms_hold

M, N = fig1()


def test_rank_values_on_running_example():
    assert M.rank(P(1, 2, 3, 4)) == 2
    assert M.rank(()) == 0
    assert M.rank(P(1, 3)) == 2
    assert M.rank(P(1, 2)) == 1
    assert M.rank(M.ground) == 3


def test_rank_rejects_foreign_elements():
    with pytest.raises(ValueError):
        M.rank({8})
    with pytest.raises(ValueError):
        M.rank({-1})


def test_closure_values():
    assert M.closure(P(1, 3)) == P(1, 2, 3, 4)
    assert M.closure(()) == frozenset()
    assert M.closure(P(5)) == P(5)
    assert M.closure(P(3, 5, 7)) == M.ground


def test_flats_of_rank():
    assert M.flats_of_rank(0) == [frozenset()]
    assert M.flats_of_rank(3) == [M.ground]
    rank1 = set(M.flats_of_rank(1))
    assert rank1 == {P(1, 2), P(7, 8), P(3), P(4), P(5), P(6)}
    with pytest.raises(MatroidError):
        M.flats_of_rank(4)
    with pytest.raises(MatroidError):
        M.flats_of_rank(-1)


def test_cyclic_sets():
    assert M.is_cyclic(P(1, 2))
    assert M.is_cyclic(())
    assert not M.is_cyclic(P(1, 2, 3))
    assert M.is_flat(P(1, 2, 3, 4))
    assert not M.is_flat(P(1, 3))


def test_cyclic_flats_recomputed_match_input():
    for m in (M, N):
        assert sorted(m.cyclic_flats(), key=str) == sorted(m.zflats, key=str)
    assert {s for s, _ in M.zflats} == {frozenset(), P(1, 2), P(7, 8), P(1, 2, 3, 4), P(1, 2, 7, 8),
                                        P(5, 6, 7, 8), M.ground}
    assert {s for s, _ in N.zflats} == {frozenset(), P(1, 2), P(7, 8), P(1, 2, 3, 4), P(1, 2, 7, 8),
                                        P(1, 2, 5, 6), N.ground}


def test_minors():
    assert M.minor(M.ground, ()) == M
    r = M.minor(P(1, 2, 3, 4), ())
    assert (r.n, r.r) == (4, 2)
    inner = [(s, k) for s, k in r.zflats if 0 < len(s) < 4]
    assert [(len(s), k) for s, k in inner] == [(2, 1)]
    c = M.contraction(P(1, 2))
    assert (c.n, c.r) == (6, 2)
    back = {frozenset(c.element_map[e] for e in s) for s, _ in c.zflats}
    assert back == {frozenset(), P(3, 4), P(7, 8), P(3, 4, 5, 6, 7, 8)}


def test_minor_rank_agrees_with_formula():
    # r_{M|x/y}(A) = r(A ∪ y) - r(y)
    for x, y in ((M.ground, P(7, 8)), (P(1, 2, 7, 8), P(1, 2)), (P(5, 6, 7, 8), frozenset())):
        mi = M.minor(x, y)
        inv = {old: new for new, old in enumerate(mi.element_map)}
        pool = sorted(x - y)
        for mask in range(1 << len(pool)):
            a = {pool[i] for i in range(len(pool)) if mask >> i & 1}
            assert mi.rank({inv[e] for e in a}) == M.rank(a | y) - M.rank(y)
    with pytest.raises(MatroidError):
        M.minor(P(1, 2, 3), ())


def test_dual():
    d = M.dual()
    assert d.r == 5
    assert d.dual() == M
    assert {s for s, _ in d.zflats} == {M.ground - s for s, _ in M.zflats}
    for a in range(1 << 8):
        A = from_mask(a)
        assert d.rank(A) == len(A) + M.rank(M.ground - A) - M.r


def test_independent_hyperplanes():
    assert M.independent_hyperplane_count() == 4
    assert N.independent_hyperplane_count() == 4


def test_uniform():
    u = uniform(2, 4)
    assert [k for _, k in u.zflats] == [0, 2]
    assert uniform(0, 3).loops == frozenset(range(3))
    assert uniform(3, 3).coloops == frozenset(range(3))
    with pytest.raises(MatroidError):
        uniform(4, 3)


def test_paving_spec_checks():
    with pytest.raises(MatroidError):
        check_paving_spec(PavingSpec(6, 3, ((0, 1, 2), (0, 1, 3))))
    with pytest.raises(MatroidError):
        check_paving_spec(PavingSpec(6, 3, ((0, 1),)))
    m = matroid_from_paving(PavingSpec(6, 3, ((0, 1, 2), (3, 4, 5))))
    assert m.rank({0, 1, 2}) == 2 and m.rank({0, 1, 3}) == 3


def test_pickle_round_trip():
    assert pickle.loads(pickle.dumps(M)) == M


def test_bits_helpers():
    assert to_mask({0, 3}, 4) == 0b1001
    assert list(elements(0b1010)) == [1, 3]
    assert full(3) == 7
    with pytest.raises(ValueError):
        to_mask({4}, 4)


@pytest.mark.parametrize("m", corpus(), ids=lambda m: m.name or "m")
def test_corpus_rank_axioms_and_cyclic_flats(m):
    assert rank_axioms_hold(m.n, m._rank)
    assert sorted(brute_cyclic_flats(m.n, m._rank), key=str) == sorted(m.zflats, key=str)
    flats = sorted(f for k in range(m.r + 1) for f in m._flats(k))
    assert flats == sorted(brute_flats(m.n, m._rank))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_rank_formula_matches_matrix_rank(seed):
    m, mm = random_matrix_matroid(seed, loopless_coloopless=False)
    for a in range(1 << m.n):
        assert m._rank(a) == mm.rank(a)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.data())
def test_closure_properties(seed, data):
    m, _ = random_matrix_matroid(seed, loopless_coloopless=False)
    a = data.draw(st.integers(0, (1 << m.n) - 1))
    b = data.draw(st.integers(0, (1 << m.n) - 1))
    cl = m._closure(a)
    assert cl & a == a
    assert m._closure(cl) == cl
    assert m._rank(cl) == m._rank(a)
    assert m._closure(a & b) & ~m._closure(a | b) == 0


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_dual_is_involution_with_complement_rank(seed):
    m, _ = random_matrix_matroid(seed, loopless_coloopless=False)
    d = m.dual()
    assert d.dual() == m
    E = full(m.n)
    for a in range(1 << m.n):
        assert d._rank(a) == a.bit_count() + m._rank(E & ~a) - m.r


def test_subset_histogram():
    counts = count_subsets_by_rank(uniform(2, 4))
    assert counts == {(0, 0): 1, (1, 1): 4, (2, 2): 6, (3, 2): 4, (4, 2): 1}
    assert sum(counts.values()) == 16
    assert binomial(5, 2) == comb(5, 2) and binomial(3, 4) == 0
