from fractions import Fraction

import pytest

from orbitlim.errors import AmbientMismatch, NoSolution, NotContained
from orbitlim.linalg import (
    RatMatrix,
    Subspace,
    exp_nilpotent,
    is_semisimple,
    jordan_chevalley,
    minimal_polynomial,
    nullspace,
    rational_roots,
    rref,
    solve_linear,
    sylvester_solve,
)


def test_rref_proportional_rows():
    reduced, pivots, rank = rref(RatMatrix([[1, 2], [2, 4]]))
    assert rank == 1
    assert pivots == [0]
    assert reduced == RatMatrix([[1, 2], [0, 0]])


def test_rref_identity_and_permutation():
    ident = RatMatrix.identity(3)
    assert rref(ident) == (ident, [0, 1, 2], 3)
    reduced, _, rank = rref(RatMatrix([[0, 1], [1, 0]]))
    assert reduced == RatMatrix.identity(2)
    assert rank == 2


def test_rref_fractions_stay_exact():
    reduced, _, _ = rref(RatMatrix([[3, 1], [1, 3]]))
    assert reduced == RatMatrix.identity(2)
    reduced, _, _ = rref(RatMatrix([[3, 1, 1]]))
    assert reduced[0, 1] == Fraction(1, 3)


def test_nullspace_examples():
    assert nullspace(RatMatrix.zeros(2)) == Subspace.full(2)
    assert nullspace(RatMatrix.identity(3)).dim == 0
    ns = nullspace(RatMatrix([[1, 1, 0]]))
    assert ns.dim == 2
    assert ns.contains((1, -1, 0))
    assert ns.contains((0, 0, 1))
    assert not ns.contains((1, 0, 0))


def test_subspace_sum_intersect():
    e1 = Subspace([(1, 0)], 2)
    e2 = Subspace([(0, 1)], 2)
    assert e1.sum(e2).dim == 2
    assert e1.intersect(e2).dim == 0
    assert (e1 + e2) == Subspace.full(2)


def test_reduce_mod_kills_pivot():
    assert Subspace([(1, 0)], 2).reduce_mod((3, 5)) == (0, 5)
    assert Subspace([(1, 0)], 2).reduce_mod((3, 0)) == (0, 0)


def test_subspace_canonical_basis():
    a = Subspace([(1, 2, 3), (0, 1, 1)], 3)
    b = Subspace([(1, 3, 4), (2, 5, 7)], 3)
    assert a == b
    assert hash(a) == hash(b)
    assert a.basis == b.basis


def test_quotient_dim_and_errors():
    small = Subspace([(1, 0, 0)], 3)
    big = Subspace([(1, 0, 0), (0, 1, 0)], 3)
    assert small.quotient_dim(big) == 1
    with pytest.raises(NotContained):
        big.quotient_dim(small)
    with pytest.raises(AmbientMismatch):
        small.sum(Subspace.full(2))
    with pytest.raises(AmbientMismatch):
        Subspace([(1, 2)], 3)


def test_complement_in():
    P = Subspace([(1, 0, 0), (0, 1, 0)], 3)
    G = Subspace.full(3)
    F = P.complement_in(G)
    assert F.dim == 1
    assert P.sum(F) == G


def test_minimal_polynomial_examples():
    assert minimal_polynomial(RatMatrix.identity(3)) == (-1, 1)
    assert minimal_polynomial(RatMatrix([[0, 1], [0, 0]])) == (0, 0, 1)
    assert minimal_polynomial(RatMatrix.diag([1, 2])) == (2, -3, 1)


def test_jordan_chevalley_block():
    a = RatMatrix([[1, 1], [0, 1]])
    assert not is_semisimple(a)
    s, n = jordan_chevalley(a)
    assert s == RatMatrix.identity(2)
    assert n == RatMatrix([[0, 1], [0, 0]])


def test_jordan_chevalley_semisimple():
    d = RatMatrix.diag([1, 2, 3])
    assert is_semisimple(d)
    s, n = jordan_chevalley(d)
    assert s == d and n.is_zero()
    assert is_semisimple(RatMatrix([[0, 1], [-1, 0]]))


def test_jordan_chevalley_mixed():
    a = RatMatrix([[2, 1, 0], [0, 2, 0], [0, 0, 3]])
    s, n = jordan_chevalley(a)
    assert s == RatMatrix.diag([2, 2, 3])
    assert (s @ n) == (n @ s)
    assert (n @ n).is_zero()


def test_sylvester_examples():
    x = sylvester_solve(RatMatrix.diag([1]), RatMatrix.diag([2]), RatMatrix([[5]]))
    assert x == RatMatrix([[-5]])
    ident = RatMatrix.identity(2)
    assert sylvester_solve(ident, ident, RatMatrix.zeros(2)).is_zero()
    x = sylvester_solve(RatMatrix.diag([1, 3]), RatMatrix.diag([2]), RatMatrix([[1], [1]]))
    assert x == RatMatrix([[-1], [1]])


def test_sylvester_inconsistent():
    ident = RatMatrix.identity(1)
    with pytest.raises(NoSolution):
        sylvester_solve(ident, ident, RatMatrix([[1]]))


def test_solve_linear_and_roots():
    assert solve_linear(RatMatrix([[1, 1], [1, -1]]), [3, 1]) == (2, 1)
    assert solve_linear(RatMatrix([[1, 1], [1, 1]]), [1, 2]) is None
    assert rational_roots((-2, 1, 1)) == [-2, 1]
    assert rational_roots((1, 0, 1)) == []


def test_det_inverse_exp():
    m = RatMatrix([[2, 1], [1, 1]])
    assert m.det() == 1
    assert m @ m.inverse() == RatMatrix.identity(2)
    n = RatMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    e = exp_nilpotent(n)
    assert e[0, 2] == Fraction(1, 2)
