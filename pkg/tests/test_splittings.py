import pytest
from hypothesis import given, strategies as st

from argyle.chains import ChainLabel, DomainError
from argyle.geometry import block_decompose
from argyle.splittings import (SplittingType, admissible_splittings, admissible_strata, candidate_splittings,
                               generic_splitting, type_change_children)


def test_splitting_type_basics():
    s = SplittingType.from_degrees([0, -2, 0])
    assert s.parts == ((0, 2), (-2, 1))
    assert s.atoms == (0, 0, -2)
    assert (s.rank, s.degree, s.spread) == (3, -2, 4)
    assert str(s) == "(0,0,-2)"
    with pytest.raises(DomainError):
        SplittingType(((0, 1), (1, 1)))


@given(st.integers(1, 6), st.integers(-20, 20))
def test_generic_splitting_is_balanced(k, d):
    s = generic_splitting(k, d)
    assert s.rank == k and s.degree == d
    assert max(s.atoms) - min(s.atoms) <= 1


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=4))
def test_type_change_raises_spread(atoms):
    s = SplittingType.from_degrees(atoms)
    for child in type_change_children(s):
        assert child.rank == s.rank and child.degree == s.degree
        assert child.spread > s.spread


def test_strata_of_the_type_changing_rank3_component():
    label = ChainLabel((2, 1), (2, -3), 6)
    strata = admissible_strata(label)
    assert [str(sp[0]) for sp in strata] == ["(1,1)", "(2,0)"]


def test_strata_of_the_t5_block():
    label = ChainLabel((1, 2, 1), (2, -1, -2), 5)
    assert [str(sp[1]) for sp in admissible_strata(label)] == ["(0,-1)", "(1,-2)"]
    block = block_decompose(label)[0]
    assert [str(s) for s in admissible_splittings(block)] == ["(0,-1)", "(1,-2)"]


def test_length5_chain_keeps_generic_first_block():
    for t in (5, 6):
        strata = admissible_strata(ChainLabel((1, 2, 1, 3, 1), (0, 0, 3, -2, -2), t))
        assert {str(sp[1]) for sp in strata} == {"(0,0)"}
        assert str(strata[0][3]) == "(0,-1,-1)"


def test_spurious_rank3_labelling_is_rejected():
    # a rank-one node feeding two summands spans an invariant line of degree c - t
    label = ChainLabel((1, 2), (3, -4), 6)
    assert admissible_strata(label) == []


def test_candidate_box_contains_admissible():
    label = ChainLabel((1, 2, 1), (2, 0, -3), 6)
    block = block_decompose(label)[0]
    cands = set(candidate_splittings(block))
    for sp in admissible_strata(label):
        assert sp[1] in cands
