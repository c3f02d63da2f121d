from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclicflats import FiniteLattice, LabeledLattice, LatticeError, configuration_of, find_isomorphism, \
    labeled_isomorphic
from cyclicflats.lattice import glue_transitive_closure, transitive_closure

from corpus import corpus, fig1


def diamond():
    return FiniteLattice.from_relation(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def test_diamond_meets_joins():
    L = diamond()
    a, b = L.index("a"), L.index("b")
    assert L.names[L.meet(a, b)] == "0"
    assert L.names[L.join(a, b)] == "1"
    assert L.names[L.bottom] == "0" and L.names[L.top] == "1"
    assert L.heights == [0, 1, 1, 2]


def test_non_lattices_rejected():
    # two minimal elements
    with pytest.raises(LatticeError):
        FiniteLattice.from_relation(["a", "b", "1"], [("a", "1"), ("b", "1")])
    # bowtie: a, b both below c and d
    with pytest.raises(LatticeError):
        FiniteLattice.from_relation(["0", "a", "b", "c", "d", "1"],
                                    [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"),
                                     ("c", "1"), ("d", "1")])
    with pytest.raises(LatticeError):
        FiniteLattice.from_relation(["a", "b"], [("a", "b"), ("b", "a")])


def test_chain_counts():
    L = diamond()
    assert L.chains() == [(1,), (2,)]
    assert L.count_chains() == 2
    B3 = FiniteLattice.from_sets([frozenset(c) for k in range(4) for c in combinations(range(3), k)])
    # proper part of the Boolean lattice of rank 3: 6 singletons, 6 two-chains
    assert B3.count_chains() == 12 == len(B3.chains())
    assert B3.count_chains(open_only=False) == len(B3.chains(open_only=False))


def test_order_dual_and_interval():
    L = diamond()
    D = L.order_dual()
    assert D.names[D.bottom] == "1"
    assert sorted(L.names[i] for i in L.interval(L.index("a"), L.top)) == ["1", "a"]


def test_running_example_configurations():
    M, N = fig1()
    cm, cn = configuration_of(M), configuration_of(N)
    assert cm.lattice.size == cn.lattice.size == 7
    assert sorted(cm.labels()) == sorted(cn.labels()) == [(0, 0), (2, 1), (2, 1), (4, 2), (4, 2), (4, 2), (8, 3)]
    assert not labeled_isomorphic(cm, cn)
    # already the bare lattices differ: {1,2} has three upper covers in N
    assert not labeled_isomorphic(cm.lattice, cn.lattice)
    assert sorted(len(u) for u in cn.lattice.upper_covers) == [0, 1, 1, 1, 1, 2, 3]


def test_isomorphism_under_relabeling():
    M, _ = fig1()
    c = configuration_of(M)
    rng = np.random.default_rng(1)
    for _ in range(5):
        perm = rng.permutation(c.lattice.size).tolist()
        c2 = c.relabeled(perm)
        phi = find_isomorphism(c, c2)
        assert phi is not None
        for x in range(c.lattice.size):
            assert c.labels()[x] == c2.labels()[phi[x]]
            for y in range(c.lattice.size):
                assert c.lattice.leq[x, y] == c2.lattice.leq[phi[x], phi[y]]


def brute_iso(c1: LabeledLattice, c2: LabeledLattice) -> bool:
    n = c1.lattice.size
    if n != c2.lattice.size:
        return False
    for p in permutations(range(n)):
        if all(c1.labels()[x] == c2.labels()[p[x]] for x in range(n)) and \
                np.array_equal(c1.lattice.leq, c2.lattice.leq[np.ix_(p, p)]):
            return True
    return False


def test_isomorphism_search_matches_brute_force_on_corpus():
    cfgs = [configuration_of(m) for m in corpus() if len(m.zflats) <= 7]
    for c1, c2 in combinations(cfgs[:24], 2):
        assert labeled_isomorphic(c1, c2) == brute_iso(c1, c2)


def test_monotone_labels_check():
    L = diamond()
    LabeledLattice(L, [0, 2, 2, 5], [0, 1, 1, 2]).check_monotone()
    with pytest.raises(LatticeError):
        LabeledLattice(L, [0, 2, 2, 1], [0, 1, 1, 2]).check_monotone()


def test_glue_chain_into_diamond():
    L = diamond()
    ins = FiniteLattice.chain(3, ("p", "x", "q"))
    G = glue_transitive_closure(L, [(ins, "a", "1")])
    assert G.size == 5
    x = G.index("x")
    assert G.le(G.index("a"), x) and G.le(x, G.top)
    assert G.names[G.join(x, G.index("b"))] == "1"
    assert G.names[G.meet(x, G.index("b"))] == "0"
    with pytest.raises(LatticeError):
        glue_transitive_closure(L, [(FiniteLattice.chain(3, ("p", "a", "q")), "a", "1")])


def test_transitive_closure():
    rel = np.zeros((3, 3), dtype=bool)
    rel[0, 1] = rel[1, 2] = True
    assert transitive_closure(rel)[0, 2]


@st.composite
def intersection_closed_families(draw):
    n = draw(st.integers(2, 5))
    sets = draw(st.lists(st.frozensets(st.integers(0, n - 1)), max_size=7))
    fam = {frozenset(range(n))} | set(sets)
    changed = True
    while changed:
        changed = False
        for a, b in combinations(list(fam), 2):
            if a & b not in fam:
                fam.add(a & b)
                changed = True
    return sorted(fam, key=lambda s: (len(s), sorted(s)))


@settings(max_examples=60, deadline=None)
@given(intersection_closed_families())
def test_random_lattice_laws(fam):
    L = FiniteLattice.from_sets(fam)
    n = L.size
    for x in range(n):
        for y in range(n):
            m, j = L.meet(x, y), L.join(x, y)
            assert fam[m] == fam[x] & fam[y]
            assert fam[x] | fam[y] <= fam[j]
            assert L.meet(x, j) == x and L.join(x, m) == x
            assert L.meet(x, y) == L.meet(y, x)
    assert L.count_chains() == len(L.chains())
    assert len(L.order_dual().chains()) == len(L.chains())
