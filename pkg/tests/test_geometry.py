from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from argyle.chains import ChainLabel, DomainError
from argyle.dimension import moduli_dimension
from argyle.geometry import (ArgyleBlock, EmptyStratum, NonArgyleError, StratumGeometry, block_decompose,
                             closure_geometry, h0_end, h1_end, i_prime)
from argyle.reference import PUBLISHED_STRATA, variety_class
from argyle.series import grassmannian_class, multiply, projective_class
from argyle.splittings import SplittingType, admissible_strata


def block(left, mid, right, k, t, mu, idx=1):
    return ArgyleBlock(k, mid, left, right, t, Fraction(mu), idx)


def P(*dims):
    return multiply(*(projective_class(n) for n in dims))


WORKED = [
    # (label ranks, degrees, t, middle index, splitting atoms, expected class)
    ((1, 2, 1), (2, -1, -2), 5, 1, (0, -1), P(2, 3, 6)),
    ((1, 2, 1), (2, -1, -2), 5, 1, (1, -2), P(1, 2, 6)),
    ((1, 2, 1), (2, 0, -3), 6, 1, (0, 0), P(9) * grassmannian_class(2, 4)),
    ((1, 2, 1, 3, 1), (0, 0, 3, -2, -2), 5, 1, (0, 0), P(11) * grassmannian_class(2, 9)),
    ((1, 2, 1, 3, 1), (0, 0, 3, -2, -2), 5, 3, (0, -1, -1), P(3, 8)),
    ((1, 2, 1, 3, 1), (0, 0, 3, -2, -2), 6, 1, (0, 0), P(13) * grassmannian_class(2, 10)),
    ((1, 2, 1, 3, 1), (0, 0, 3, -2, -2), 6, 3, (0, -1, -1), P(4, 11) * grassmannian_class(2, 3)),
    ((1, 2, 1, 3, 1), (0, 0, 3, -2, -2), 6, 3, (1, -1, -2), P(1, 3, 10)),
    ((1, 2, 1, 3, 1), (0, 0, 3, -2, -2), 6, 3, (0, 0, -2), P(1, 8) * grassmannian_class(2, 5)),
]


def _block_of(ranks, degrees, t, mid):
    for b in block_decompose(ChainLabel(ranks, degrees, t)):
        if b.middle_index == mid:
            return b
    raise AssertionError("no such block")


@pytest.mark.parametrize("ranks,degrees,t,mid,atoms,expected", WORKED)
def test_worked_closures(ranks, degrees, t, mid, atoms, expected):
    g = closure_geometry(_block_of(ranks, degrees, t, mid), SplittingType.from_degrees(atoms))
    assert g.motivic_class() == expected


def test_p7_stratum_disagrees_with_printed_p9():
    b = _block_of((1, 2, 1), (2, 0, -3), 6, 1)
    g = closure_geometry(b, SplittingType.from_degrees((1, -1)))
    assert g.motivic_class() == P(2, 3, 7)
    printed = PUBLISHED_STRATA[((2, 0, -3), 2, 6, (-1, 4), (1, -1))]
    assert variety_class(printed) != g.motivic_class()


def test_printed_convention_misses_the_p6():
    b = _block_of((1, 2, 1), (2, -1, -2), 5, 1)
    assert closure_geometry(b, ((0, 1), (-1, 1)), convention="printed").proj_dim == 4
    assert closure_geometry(b, ((0, 1), (-1, 1))).proj_dim == 6


def test_shapes_without_projective_factor():
    # (2,1) at t=6: all maps go right, Gr(2, 6) for the balanced splitting
    (b,) = block_decompose(ChainLabel((2, 1), (0, -1), 6))
    assert b.shape == "k1"
    assert closure_geometry(b, SplittingType.from_degrees((0, 0))).motivic_class() == grassmannian_class(2, 6)
    (b,) = block_decompose(ChainLabel((1, 2), (1, -2), 6))
    assert b.shape == "1k"
    assert closure_geometry(b, SplittingType.from_degrees((-1, -1))).motivic_class() == grassmannian_class(2, 5)


def test_empty_strata_raise():
    with pytest.raises(EmptyStratum):
        StratumGeometry(-1, ())
    with pytest.raises(EmptyStratum):
        StratumGeometry(None, ((3, 2),))
    b = _block_of((1, 2, 1), (2, -1, -2), 5, 1)
    with pytest.raises(EmptyStratum):
        closure_geometry(b, SplittingType.from_degrees((5, -6)))


def test_block_decomposition():
    blocks = block_decompose(ChainLabel((1, 1, 1, 1), (3, 1, -1, -4), 4))
    assert [(b.middle_index, b.shape) for b in blocks] == [(1, "1k1"), (3, "1k")]
    with pytest.raises(NonArgyleError) as exc:
        block_decompose(ChainLabel((2, 2), (0, -1), 2))
    assert "(2,2)" in str(exc.value)


def test_i_prime_rejects_degree_on_the_slope():
    assert i_prime(((1, 1), (0, 2)), Fraction(1, 2)) == 1
    with pytest.raises(DomainError):
        i_prime(((1, 1), (0, 1)), Fraction(0))


def test_h0_h1_end():
    assert h0_end(((0, 1), (-1, 1))) == 4
    assert h1_end(((0, 1), (-1, 1))) == 0
    assert h0_end(((1, 1), (-2, 1))) == 6
    assert h1_end(((1, 1), (-2, 1))) == 2
    assert h0_end(((0, 3),)) == 9


@pytest.mark.parametrize("ranks,degrees,t", [((1, 2, 1), (2, -1, -2), 5), ((1, 2, 1), (2, 0, -3), 6),
                                             ((1, 2, 1, 3, 1), (0, 0, 3, -2, -2), 5),
                                             ((1, 2, 1, 3, 1), (0, 0, 3, -2, -2), 6),
                                             ((2, 1), (2, -3), 6), ((1, 2), (2, -3), 6)])
def test_stratum_dimension_matches_theorem_minus_h1(ranks, degrees, t):
    label = ChainLabel(ranks, degrees, t)
    blocks = block_decompose(label)
    for sp in admissible_strata(label):
        dim = sum(closure_geometry(b, sp[b.middle_index]).dimension for b in blocks)
        h0 = [h0_end(sp[i]) if i in sp else 1 for i in range(label.n)]
        h1 = sum(h1_end(s) for s in sp.values())
        assert dim == moduli_dimension(label, h0) - h1


@given(st.sampled_from(WORKED), st.integers(-3, 3))
def test_closures_are_shift_invariant(case, c):
    ranks, degrees, t, mid, atoms, expected = case
    label = ChainLabel(ranks, degrees, t).shifted(c)
    shifted_atoms = tuple(a + c for a in atoms)
    g = closure_geometry(_block_of(label.ranks, label.degrees, t, mid), SplittingType.from_degrees(shifted_atoms))
    assert g.motivic_class() == expected
