from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from argyle.chains import ChainLabel, DomainError
from argyle.geometry import NonArgyleError
from argyle.sigma import (_residual, alpha_from_sigma, build_sigma_system, pi_prime_first_degree,
                          pullback_degrees, reduced_sigma_matrix, sigma_determinant_check,
                          sigma_determinant_closed_form, solve_sigma, tuple_bundle_degrees,
                          tuple_stability_check)


def argyle_label(mids, degrees, t):
    ranks = [1]
    for m in mids:
        ranks += [m, 1]
    return ChainLabel(ranks, degrees, t)


@st.composite
def argyle_labels(draw, max_q=3):
    q = draw(st.integers(1, max_q))
    mids = draw(st.lists(st.integers(1, 4), min_size=q, max_size=q))
    degrees = draw(st.lists(st.integers(-10, 10), min_size=2 * q + 1, max_size=2 * q + 1))
    return argyle_label(mids, degrees, draw(st.integers(0, 8)))


def test_system_example():
    s = build_sigma_system(ChainLabel((1, 2, 1), (0, -1, -2), 5))
    assert s.e == -3 + (4 * 5 - 3 * 0) == 17
    assert s.matrix == ((Fraction(-1), Fraction(1)), (Fraction(0), Fraction(-2)))
    assert solve_sigma(s) == [Fraction(1, 4), Fraction(1, 4)]


def test_q1_entries():
    for k in range(1, 6):
        s = build_sigma_system(argyle_label([k], [0, 0, 0], 1))
        r = k + 2
        assert s.matrix == ((1 - Fraction(r, k), Fraction(1)), (2 - Fraction(r, k), Fraction(2 - r)))


def test_unit_middles_have_small_entry_set():
    s = build_sigma_system(argyle_label([1, 1], [0, 1, -2, 0, 1], 3))
    assert {x for row in s.matrix for x in row} <= {1, 1 - 5, 2, 2 - 5}


def test_line_chain_by_cramer():
    label = ChainLabel((1, 1, 1), (0, 2, -3), 4)
    s = build_sigma_system(label)
    (a, b), (c, d) = s.matrix
    det = a * d - b * c
    x = (s.rhs[0] * d - b * s.rhs[1]) / det
    y = (a * s.rhs[1] - c * s.rhs[0]) / det
    assert solve_sigma(s) == [x, y]


@given(argyle_labels())
def test_residual_is_zero_and_perturbation_is_caught(label):
    s = build_sigma_system(label)
    sigma = solve_sigma(s)
    assert not any(_residual(s, sigma))
    bumped = s.__class__(s.matrix, (s.rhs[0] + 1,) + s.rhs[1:], s.ranks, s.degrees, s.twist, s.genus, s.e, s.shift)
    assert any(_residual(bumped, sigma))


@given(argyle_labels())
def test_e_is_the_total_tuple_degree(label):
    s = build_sigma_system(label)
    assert s.degrees[0] == 0
    assert s.e == sum(tuple_bundle_degrees(s.ranks, s.degrees, s.twist))


def test_determinant_examples():
    for k in range(1, 6):
        assert sigma_determinant_check((1, k, 1)) == (Fraction(k + 2, k), Fraction(k + 2, k))
    assert sigma_determinant_check((1, 1, 1, 1, 1))[0] == 125


@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_determinant_closed_form_all_small_tuples(q):
    for mids in product(range(1, 6), repeat=q):
        ranks = [1]
        for m in mids:
            ranks += [m, 1]
        det, closed = sigma_determinant_check(ranks)
        assert det == closed != 0


def test_determinant_is_positive():
    # the determinant lemma gives (r - q - sum r_j) r^(2q-1) / prod r_j with r - q - sum r_j = 1
    assert sigma_determinant_closed_form((1, 3, 1, 2, 1)) == Fraction(8 ** 3, 6)


def test_reduced_matrix_shape():
    m = reduced_sigma_matrix((1, 2, 1, 3, 1))
    r = 8
    for i, row in enumerate(m):
        for j, x in enumerate(row):
            if i != j:
                assert x == 1
    assert [m[i][i] for i in range(4)] == [1 - Fraction(r, 2), 1 - r, 1 - Fraction(r, 3), 1 - r]


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(0, 6), st.integers(-8, 4))
def test_line_subbundle_equivalence(d2, d3, t, dline):
    # first family: a line in U_2 alone; second family: that line plus U_1^* U_3 L^2
    label = ChainLabel((1, 2, 1), (0, d2, d3), t)
    s = build_sigma_system(label)
    sigma = solve_sigma(s)
    mu = Fraction(s.degrees[0] + s.degrees[1] + s.degrees[2], 4)
    k = (2, 1)
    e1 = -s.degrees[0] + dline + t
    assert tuple_stability_check((1, 0), e1, False, k, s.e, sigma) == (dline < mu)
    e2 = -2 * s.degrees[0] + dline + s.degrees[2] + 3 * t
    assert tuple_stability_check((1, 1), e2, False, k, s.e, sigma) == (dline < mu)


def test_stability_check_edges():
    sigma = [Fraction(1, 4), Fraction(1, 4)]
    assert tuple_stability_check((0, 0), -10 ** 6, False, (2, 1), 17, sigma)
    with pytest.raises(DomainError):
        tuple_stability_check((3, 0), 0, False, (2, 1), 17, sigma)


@given(argyle_labels(), st.integers(-5, 5))
def test_shift_covariance(label, c):
    shifted = label.shifted(c)
    assert solve_sigma(build_sigma_system(shifted)) == solve_sigma(build_sigma_system(label))
    raw, raw_shifted = build_sigma_system(label, normalize=False), build_sigma_system(shifted, normalize=False)
    diff = [b - a for a, b in zip(solve_sigma(raw), solve_sigma(raw_shifted))]
    q = raw.q
    mids = [label.ranks[j] for j in range(1, 2 * q, 2)]
    predicted = [-Fraction(c, 2 * q * m) for m in mids] + [-Fraction(c, 2 * q) * (Fraction(1, m) + 1) for m in mids]
    assert [sum(a * x for a, x in zip(row, diff)) for row in raw.matrix] == predicted
    assert raw_shifted.e == raw.e + c


@given(argyle_labels(), st.integers(-5, 5))
def test_pullback_degrees(label, c):
    b = pullback_degrees(label)
    assert len(b) == label.n // 2 + 1
    assert b[0] == pi_prime_first_degree(label)
    assert pullback_degrees(label.shifted(c)) == b


def test_pullback_first_entry_for_1k1():
    for k, (d1, d2, d3), t in [(2, (0, -1, -2), 5), (3, (1, 4, -2), 2), (1, (-3, 0, 2), 7)]:
        label = ChainLabel((1, k, 1), (d1, d2, d3), t)
        assert pullback_degrees(label)[0] == (d1 + d2 + d3) - (k + 1) * d1 - d3 + k * t


@given(argyle_labels())
def test_alpha_normalisations_agree(label):
    sigma = solve_sigma(build_sigma_system(label))
    assert alpha_from_sigma(label, sigma, "n-1") == alpha_from_sigma(label, sigma, "2q")


def test_rejects_bad_shapes():
    with pytest.raises(DomainError):
        build_sigma_system(ChainLabel((1, 2), (0, -1), 2))
    with pytest.raises(NonArgyleError):
        build_sigma_system(ChainLabel((2, 1, 1), (0, -1, 0), 2))
    with pytest.raises(DomainError):
        alpha_from_sigma(ChainLabel((1, 1, 1), (0, 0, -1), 2), [0, 0], "n")
