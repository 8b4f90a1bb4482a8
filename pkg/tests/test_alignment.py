import pytest

from orbitlim.alignment import (
    CaseB,
    alignment_dichotomy,
    block_triangularize,
    boundary_recipe,
    col_blocks,
    conjugate_into_levi,
    correspondence,
    rectangular_partitions,
    row_blocks,
)
from orbitlim.errors import IrrationalSpectrum, NotInParabolic, NotSemisimple
from orbitlim.forms import LeftMult
from orbitlim.grading import grade_lie
from orbitlim.linalg import RatMatrix


def test_levi_identity_when_degree_zero():
    k = RatMatrix.diag([1, 2])
    u, kc = conjugate_into_levi(k, (0, 1))
    assert u == RatMatrix.identity(2)
    assert kc == k


@pytest.mark.parametrize("c", [1, -3, 5])
def test_levi_two_by_two(c):
    k = RatMatrix([[1, 0], [c, 2]])
    u, kc = conjugate_into_levi(k, (0, 1))
    assert u == RatMatrix([[1, 0], [c, 1]])
    assert kc == RatMatrix.diag([1, 2])
    assert u @ k @ u.inverse() == kc


def test_levi_three_by_three_peeling():
    k = RatMatrix([[1, 0, 0], [2, 2, 0], [1, 3, 3]])
    u, kc = conjugate_into_levi(k, (0, 1, 2))
    assert set(grade_lie((0, 1, 2), kc).degrees()) == {0}
    assert u @ k @ u.inverse() == kc


def test_levi_rejects():
    with pytest.raises(NotSemisimple):
        conjugate_into_levi(RatMatrix([[1, 0], [1, 1]]), (0, 1))
    with pytest.raises(NotInParabolic):
        conjugate_into_levi(RatMatrix([[1, 1], [0, 2]]), (0, 1))


def test_block_triangularize():
    r = RatMatrix([[0, 1], [1, 0]])
    S = block_triangularize(r, 1)
    assert S == RatMatrix([[1, 1], [0, 1]])
    assert S @ r @ S.inverse() == RatMatrix([[1, 0], [1, -1]])
    lower = RatMatrix([[1, 0], [4, 2]])
    assert block_triangularize(lower, 1) == RatMatrix.identity(2)
    with pytest.raises(IrrationalSpectrum):
        block_triangularize(RatMatrix([[0, 1], [-1, 0]]), 1)


def test_partitions_trivial_and_singletons():
    rects = rectangular_partitions((0, 0), (0, 0))
    assert len(rects) == 1 and len(rects[0].cells()) == 4
    rects = rectangular_partitions((0, 1, 2), (0, 5))
    assert len(rects) == 6


def test_partitions_det7_blocks():
    rects = rectangular_partitions((0, 1, 1, 1, 2, 2, 2), (0, -1, -1, -1, -2, -2, -2))
    assert row_blocks(rects) == [(1,), (2, 3, 4), (5, 6, 7)]
    assert col_blocks(rects) == [(1,), (2, 3, 4), (5, 6, 7)]


def test_correspondence_extremes():
    a = rectangular_partitions((0,), (0,))
    b = rectangular_partitions((0, 0), (0,))
    assert correspondence(a, b) == [(0, 0)]
    c = rectangular_partitions((7,), (0,))
    assert correspondence(a, c) == []


def test_popov_case_b():
    rep = LeftMult(4, 3)
    y = RatMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]])
    res = alignment_dichotomy(rep, y, (0, 1, 2, 2))
    assert isinstance(res, CaseB)
    assert all(res.checks.values())


def test_boundary_recipe_n2():
    res = boundary_recipe(2, [([0, 3], 0), ([1, 2], 1)])
    assert res.dim_K == 6
    assert res.Q.degree == 2
