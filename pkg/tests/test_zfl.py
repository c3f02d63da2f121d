import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclicflats import MatroidError, RankedFamily, ZAxiomError, configuration_of, matroid_from_cyclic_flats, \
    validate_Z_axioms

from corpus import corpus, fig1, labelled as P
from fuzz import confirm_acceptance, confirm_rejection, mutate

M, N = fig1()


def fam(m):
    return [(s, k) for s, k in m.zflats]


def test_running_examples_validate():
    assert validate_Z_axioms(8, fam(M)).ok
    assert validate_Z_axioms(8, fam(N)).ok


def test_top_rank_mutation_fails_z2():
    bad = [(s, 8 if s == M.ground else k) for s, k in fam(M)]
    rep = validate_Z_axioms(8, bad)
    assert not rep.ok and rep.axiom == "Z2"
    assert rep.witness[1] == M.ground and rep.witness[3] == 8
    assert confirm_rejection(8, bad, rep)
    with pytest.raises(ZAxiomError) as info:
        matroid_from_cyclic_flats(8, bad)
    assert info.value.report.axiom == "Z2"


def test_each_axiom_has_a_failing_family():
    # Z0: two incomparable sets with no common upper bound in the family
    rep = validate_Z_axioms(4, [((), 0), ((0, 1), 1), ((2, 3), 1)])
    assert rep.axiom == "Z0"
    # Z1
    rep = validate_Z_axioms(4, [((), 1), ((0, 1, 2, 3), 2)])
    assert rep.axiom == "Z1"
    # Z2 with equal ranks
    rep = validate_Z_axioms(4, [((), 0), ((0, 1), 1), ((0, 1, 2, 3), 1)])
    assert rep.axiom == "Z2"
    # Z3: two rank-1 pairs meeting in an element outside their meet
    rep = validate_Z_axioms(5, [((), 0), ((0, 1), 1), ((1, 2), 1), ((0, 1, 2, 3, 4), 2)])
    assert rep.axiom == "Z3"
    assert not validate_Z_axioms(3, []).ok
    assert validate_Z_axioms(3, [((0, 5), 1)]).axiom == "input"
    assert validate_Z_axioms(3, [((0,), 1), ((0,), 1)]).axiom == "input"


def test_loops_and_coloops_rejected_unless_allowed():
    with pytest.raises(MatroidError):
        matroid_from_cyclic_flats(3, [((0,), 0), ((0, 1, 2), 1)])
    with pytest.raises(MatroidError):
        matroid_from_cyclic_flats(3, [((), 0), ((0, 1), 1)])
    m = matroid_from_cyclic_flats(3, [((), 0), ((0, 1), 1)], allow_loops_coloops=True)
    assert m.coloops == frozenset({2})


def test_round_trip_through_family():
    for m in corpus():
        f = RankedFamily(m.n, tuple(m.zflats)).canonical()
        assert f.validate().ok
        assert f.to_matroid() == m


def test_configuration_labels():
    c = configuration_of(M)
    idx = c.lattice.index(P(1, 2, 3, 4))
    assert (c.sizes[idx], c.ranks[idx]) == (4, 2)


def test_printed_large_block_family_validates():
    from cyclicflats.constructions import example3_printed_spec, paving_families
    f1, f2 = paving_families(example3_printed_spec())
    assert f1.n == 42
    assert f1.validate().ok and f2.validate().ok
    assert max(k for _, k in f1.entries) == 10


def test_mutation_fuzz_small():
    rng = np.random.default_rng(7)
    base = [m for m in corpus() if m.n <= 7]
    for t in range(150):
        m = base[t % len(base)]
        _, ents = mutate(m.n, fam(m), rng)
        rep = validate_Z_axioms(m.n, ents)
        if rep.ok:
            assert confirm_acceptance(m.n, ents)
        else:
            assert confirm_rejection(m.n, ents, rep), rep


@settings(max_examples=40, deadline=None)
@given(st.integers(0, len(corpus()) - 1), st.permutations(range(8)))
def test_validation_is_label_invariant(i, perm):
    m = corpus()[i]
    p = [x for x in perm if x < m.n]
    moved = [(frozenset(p[e] for e in s), k) for s, k in m.zflats]
    assert validate_Z_axioms(m.n, moved).ok
