import pytest
from hypothesis import given, strategies as st

from argyle.chains import ChainLabel, DomainError, compositions, enumerate_labellings, label_admissible, total_slope


def test_compositions_in_order():
    assert list(compositions(3)) == [(3,), (1, 2), (2, 1), (1, 1, 1)]
    assert list(compositions(3, min_parts=2)) == [(1, 2), (2, 1), (1, 1, 1)]
    assert sum(1 for _ in compositions(6)) == 2 ** 5


@pytest.mark.parametrize("t", range(1, 11))
@pytest.mark.parametrize("d", [-1, 1, 3])
def test_rank2_labellings(t, d):
    labels = enumerate_labellings(2, d, t)
    assert len(labels) == (t + 1) // 2
    assert all(lab.ranks == (1, 1) for lab in labels)
    if d == -1:
        assert [lab.degrees for lab in labels] == [(a, -1 - a) for a in range((t + 1) // 2)]


def test_rank3_inventories():
    t2 = enumerate_labellings(3, -1, 2)
    assert [(lab.ranks, lab.degrees) for lab in t2] == [
        ((2, 1), (0, -1)), ((1, 1, 1), (0, 0, -1)), ((1, 1, 1), (1, -1, -1)), ((1, 1, 1), (1, 0, -2))]
    t6 = enumerate_labellings(3, -1, 6)
    by_type = {}
    for lab in t6:
        by_type.setdefault(lab.ranks, []).append(lab.degrees)
    assert by_type[(2, 1)] == [(0, -1), (1, -2), (2, -3)]
    assert by_type[(1, 2)] == [(1, -2), (2, -3)]
    assert len(by_type[(1, 1, 1)]) == 21


def test_rank_one_and_domain_errors():
    assert enumerate_labellings(1, 5, 3) == [ChainLabel((1,), (5,), 3)]
    with pytest.raises(DomainError):
        enumerate_labellings(4, 2, 2)
    with pytest.raises(DomainError):
        ChainLabel((1, 0), (0, 0))
    with pytest.raises(DomainError):
        ChainLabel((1, 1), (0,))
    with pytest.raises(DomainError):
        label_admissible(ChainLabel((1, 1), (0, -1), 2, genus=2))


def test_slope():
    assert total_slope(ChainLabel((1, 2, 1), (2, -1, -2), 5)) == pytest.approx(-0.25)


@given(st.sampled_from(enumerate_labellings(3, -1, 4) + enumerate_labellings(2, 1, 5)),
       st.integers(-3, 3))
def test_admissibility_is_shift_invariant(label, c):
    assert label_admissible(label.shifted(c))


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(1, 6))
def test_line_chains_need_a_nonzero_map(a, b, t):
    label = ChainLabel((1, 1), (a, b), t)
    if (a + b) % 2 == 0:
        return
    expect = a > b and b - a + t >= 0  # O(a) must be destabilising on its own otherwise
    assert label_admissible(label) == expect
