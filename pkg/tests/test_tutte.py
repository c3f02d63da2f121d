import pytest
from hypothesis import given, settings, strategies as st

from cyclicflats import uniform
from cyclicflats.core import MatroidError, count_subsets_by_rank
from cyclicflats.tutte import (evaluate, format_polynomial, rank_size_counts_via_flats, tutte_deletion_contraction,
                               tutte_polynomial)

from corpus import corpus, fig1, random_matrix_matroid


def test_u24():
    p = tutte_polynomial(uniform(2, 4))
    assert p == {(2, 0): 1, (1, 0): 2, (0, 1): 2, (0, 2): 1}
    assert format_polynomial(p) == "x^2 + 2*x + y^2 + 2*y"
    assert p == tutte_deletion_contraction(uniform(2, 4))


def test_loops_and_coloops():
    assert tutte_polynomial(uniform(0, 2)) == {(0, 2): 1}
    assert tutte_polynomial(uniform(2, 2)) == {(2, 0): 1}
    assert tutte_deletion_contraction(uniform(0, 2)) == {(0, 2): 1}


def test_evaluations():
    M, _ = fig1()
    p = tutte_polynomial(M)
    # T(2,2) counts subsets, T(1,1) counts bases
    assert evaluate(p, 2, 2) == 2 ** 8
    bases = sum(1 for a in range(1 << 8) if a.bit_count() == 3 and M._rank(a) == 3)
    assert evaluate(p, 1, 1) == bases


def test_formatting():
    assert format_polynomial({}) == "0"
    assert format_polynomial({(0, 0): 3, (1, 1): 1, (2, 1): -2}) == "-2*x^2*y + x*y + 3"


def test_unknown_method():
    with pytest.raises(ValueError):
        tutte_polynomial(uniform(1, 2), method="magic")
    with pytest.raises(MatroidError):
        tutte_deletion_contraction(uniform(2, 13))


@pytest.mark.parametrize("m", corpus(), ids=lambda m: m.name or "m")
def test_three_routes_agree_on_corpus(m):
    p = tutte_polynomial(m, "subsets")
    assert p == tutte_polynomial(m, "flats")
    assert p == tutte_deletion_contraction(m)
    assert rank_size_counts_via_flats(m) == count_subsets_by_rank(m)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_random_matroids_with_loops_and_coloops(seed):
    m, _ = random_matrix_matroid(seed, loopless_coloopless=False)
    assert tutte_polynomial(m, "flats") == tutte_deletion_contraction(m)


def test_running_pair_share_tutte():
    M, N = fig1()
    assert tutte_polynomial(M) == tutte_polynomial(N)
