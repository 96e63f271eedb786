from collections import Counter
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from tabcorners import bijections as bj
from tabcorners import permstats as ps
from tabcorners.diagrams import Shape, corners
from tabcorners.tableaux import (
    EMPTY_TLT,
    PermutationTableau,
    TreeLikeTableau,
    generate_all,
    left_stat,
    top_stat,
    validate,
)


@pytest.mark.parametrize("n", range(1, 8))
def test_alpha_round_trip(n):
    images = set()
    for t in generate_all("tlt", n):
        a = bj.alpha(t)
        assert validate("at", a)
        assert a.shape.n == n - 1 or n == 1
        assert bj.alpha_inv(a) == t
        images.add(a)
    assert len(images) == factorial(n)


@pytest.mark.parametrize("n", range(1, 4))
def test_alpha_restricts_to_symmetric(n):
    images = {bj.alpha(t) for t in generate_all("tltsym", n)}
    assert images == set(generate_all("atsym", n))


@pytest.mark.parametrize("n", range(1, 8))
def test_gamma_round_trip(n):
    images = set()
    for t in generate_all("pt", n):
        a = bj.gamma(t)
        assert validate("at", a)
        assert a.shape.rows == t.shape.rows[1:]
        assert bj.gamma_inv(a) == t
        images.add(a)
    assert images == set(generate_all("at", n - 1))


def test_gamma_single_cell():
    t = PermutationTableau(Shape(3, (1, 1)), ("1", "0"))
    a = bj.gamma(t)
    assert a.rows == ("L",)


@pytest.mark.parametrize("n", range(1, 6))
def test_zeta_round_trip(n):
    images = set()
    for t in generate_all("ptb", n):
        a = bj.zeta(t)
        assert validate("atsym", a)
        assert bj.zeta_inv(a) == t
        images.add(a)
    assert images == set(generate_all("atsym", n))


@pytest.mark.parametrize("n", range(1, 5))
def test_altrep_layout(n):
    for t in generate_all("ptb", n):
        rep = bj.altrep(t)
        for r in range(1, t.shape.stair + 1):
            assert rep[(r, r)] == bj.CUT
        assert bj.altrep_inv(rep) == t
        assert bj.reflect_F_inv(bj.reflect_F(rep)) == rep


def test_zeta_rejects_asymmetric():
    (a,) = [x for x in generate_all("at", 2) if x.shape.rows == (1,) and x.rows == ("L",) and x.shape.n == 2]
    with pytest.raises(bj.BijectionError):
        bj.zeta_inv(a)


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_contract(n):
    assert bj.phi_contract_check(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_xi_contract(n):
    assert bj.xi_contract_check(n)


# --------------------------------------------------------------------------
# words and trees


def _rect(h, w):
    return Shape(h + w + 2, (w + 1,) * (h + 1))


@pytest.mark.parametrize("h,w", [(h, w) for h in range(4) for w in range(4 - h)])
def test_nat_word_bijection(h, w):
    from tabcorners.tableaux import fillings_for

    nats = [bj.NonAmbiguousTree(t) for t in fillings_for("tlt", _rect(h, w))]
    words = bj.valid_words(h, w)
    assert len(nats) == len(words)
    assert {bj.nat_to_word(t) for t in nats} == set(words)
    for t in nats:
        assert bj.word_to_nat(bj.nat_to_word(t)) == t
        assert t.transpose().h == t.w


def test_pointed_words_format():
    word = bj.parse_pointed("2 3 -2 -3 1 4 0 -1")
    assert bj.format_pointed(word) == "2 3 -2 -3 1 4 0 -1"
    assert bj.is_valid_word(word, h=3, w=4)
    assert not bj.is_valid_word((1, 1, 0))
    assert bj.is_pointed(0) and bj.is_pointed(-2) and not bj.is_pointed(1)


def test_word_star_example():
    m = bj.parse_pointed("-1 4 0 1 2 -2 3 -3")
    assert bj.word_star(m) == bj.parse_pointed("-1 4 0 -2 1 2 -3 3")
    assert bj.word_star_inv(bj.word_star(m)) == m
    untouched = bj.parse_pointed("2 3 -2 -3 1 4 0 -1")
    assert bj.word_star(untouched) == untouched


@pytest.mark.parametrize("h,w", [(h, w) for h in range(4) for w in range(4)])
def test_word_star_is_bijective(h, w):
    words = bj.valid_words(h, w)
    starred = [bj.word_star(m) for m in words]
    assert len(set(starred)) == len(words)
    assert all(bj.word_star_inv(s) == m for s, m in zip(starred, words))


def test_not_a_nat():
    with pytest.raises(bj.BijectionError):
        bj.NonAmbiguousTree(TreeLikeTableau(Shape(4, (2, 1)), ("DD", "D")))


# --------------------------------------------------------------------------
# cycles


@pytest.mark.parametrize("axis", ["first_row", "first_column"])
@pytest.mark.parametrize("n", range(1, 6))
def test_cycleperm_round_trip(n, axis):
    seen = set()
    for t in generate_all("tlt", n):
        pi = bj.tlt_to_cycleperm(t, axis)
        assert len(ps.cycles(pi)) == bj.axis_dots(t, axis)
        assert bj.cycleperm_to_tlt(pi, axis) == t
        seen.add(pi)
    assert len(seen) == factorial(n)


def test_cycle_distribution_is_stirling():
    # unsigned Stirling numbers of the first kind, row 4
    dist = Counter(bj.axis_dots(t, "first_column") for t in generate_all("tlt", 4))
    assert dist == Counter({1: 6, 2: 11, 3: 6, 4: 1})


# --------------------------------------------------------------------------
# corner cut


@pytest.mark.parametrize("n", range(1, 7))
def test_corner_cut_round_trip(n):
    triplets = set()
    for t in generate_all("tlt", n):
        for c in corners(t.shape):
            trip = bj.corner_cut(t, c)
            assert trip.n == n
            assert trip.nat.h == left_stat(trip.T_r) + 1
            assert trip.nat.w == top_stat(trip.T_l) + 1
            assert bj.corner_glue(trip) == (t, c)
            triplets.add(trip)
    assert len(triplets) == sum(len(corners(t.shape)) for t in generate_all("tlt", n))


def test_corner_cut_single_dot():
    (t,) = generate_all("tlt", 1)
    trip = bj.corner_cut(t, (1, 1))
    assert trip.T_l == EMPTY_TLT and trip.T_r == EMPTY_TLT
    assert (trip.nat.h, trip.nat.w) == (0, 0)


def test_corner_cut_rejects_non_corner():
    t = TreeLikeTableau(Shape(4, (2, 2)), ("DD", "D."))
    with pytest.raises(bj.BijectionError):
        bj.corner_cut(t, (1, 1))


WORKED = [
    ("2 3 -2 -3 1 4 0 -1", "15 17 11 16 7 5 2 3 9 1 8 4 14 12 13 19 18 10 6", 18),
    ("-1 4 0 1 2 -2 3 -3", "6 19 18 10 7 5 2 3 14 12 13 15 9 1 8 4 17 11 16", 4),
]


@pytest.mark.parametrize("word,expected,pos", WORKED)
def test_worked_runs(word, expected, pos):
    l_sigma = ps.from_cycles([(6,), (7, 5, 2, 3), (9, 1, 8, 4)], 9)
    r_sigma = ps.from_cycles([(4, 2, 3), (5,), (7, 1, 6), (9, 8)], 9)
    sigma, k = bj.assemble_run(l_sigma, r_sigma, bj.parse_pointed(word))
    assert bj.format_pointed(sigma) == expected
    assert k == pos and sigma[k - 1] == 10
    assert k in ps.run_decomposition(sigma).singletons()
    assert bj.split_run(sigma, k) == (l_sigma, r_sigma, bj.parse_pointed(word))


def test_inverse_run_example():
    run = bj.parse_pointed("4 2 6 11 9 12 8 3 7 1 5 10")
    l_sigma, r_sigma, word = bj.split_run(run, 7)
    assert ps.cycles(l_sigma) == ((3,), (4, 2), (6,), (7, 1, 5))
    assert ps.cycles(r_sigma) == ((2,), (3, 1), (4,))
    assert bj.word_star(word) == bj.parse_pointed("-2 -3 2 3 0 -1 -4 1")
    assert word == bj.parse_pointed("-2 -3 2 3 0 1 -1 -4")


@pytest.mark.parametrize("n", range(1, 7))
def test_corners_to_runs(n):
    ok, why = bj.check_corners_to_runs(n)
    assert ok, why


@pytest.mark.parametrize("n", range(2, 7))
def test_run_to_triplet_inverts(n):
    for sigma, k in bj.all_singleton_runs(n):
        trip = bj.run_to_triplet(sigma, k)
        assert bj.triplet_to_run(trip) == (sigma, k)


def test_run_to_triplet_rejects_long_run():
    with pytest.raises(bj.BijectionError):
        bj.run_to_triplet((1, 2, 3), 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_every_singleton_run_comes_from_a_corner(pi):
    pi = tuple(pi)
    for k in ps.run_decomposition(pi).singletons():
        t, c = bj.corner_glue(bj.run_to_triplet(pi, k))
        assert c in corners(t.shape)
        assert bj.triplet_to_run(bj.corner_cut(t, c)) == (pi, k)
