from fractions import Fraction

import pytest

from orbitlim.errors import ShapeMismatch, Singular, ZeroParameter
from orbitlim.forms import (
    Conjugation,
    Form,
    FormsDerivation,
    LeftMult,
    exponentiate_onps,
    monomial_basis,
    rep_from_json,
)
from orbitlim.linalg import RatMatrix


def xyz():
    return [Form.variable(3, i) for i in range(3)]


def test_form_arithmetic():
    x, y, _ = xyz()
    f = (x + y) ** 2
    assert f == x * x + (x * y).scale(2) + y * y
    assert len(f) == 3
    assert (f - f).is_zero()
    assert f.diff(0) == (x + y).scale(2)
    assert f.evaluate([1, 2, 7]) == 9


def test_monomial_basis_descending_lex():
    mons = monomial_basis(2, 2)
    assert mons == [(2, 0), (1, 1), (0, 2)]
    assert len(monomial_basis(3, 4)) == 15


def test_mixed_degree_rejected():
    x, _, _ = xyz()
    with pytest.raises(Exception):
        x + x * x


def test_apply_lie_z_derivatives():
    x, y, z = xyz()
    rep = FormsDerivation(3, 4)
    s = x * x + y * y
    f = s * s
    b, c, d = 2, -3, 5
    # E_ab acts as x_a d/dx_b, so row 3 holds z d/dx, z d/dy, z d/dz
    g = RatMatrix([[0, 0, 0], [0, 0, 0], [b, c, d]])
    assert rep.apply_lie(g, f) == s * ((x * z).scale(b) + (y * z).scale(c)).scale(4)
    # the transposed operator x d/dz, y d/dz, z d/dz kills f
    assert rep.apply_lie(g.T, f).is_zero()


def test_apply_lie_leftmult_and_conjugation():
    rep = LeftMult(4, 3)
    y = RatMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]])
    out = rep.apply_lie(RatMatrix.unit(4, 0, 1), y)
    assert out == RatMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]])
    conj = Conjugation(3)
    v = RatMatrix([[1, 2, 0], [0, 3, 1], [4, 0, 1]])
    assert conj.apply_lie(v, v).is_zero()


def test_apply_group_diagonal_scaling():
    x, y, z = xyz()
    rep = FormsDerivation(3, 4)
    f = (x * x + y * y + z * z) ** 2
    g = exponentiate_onps((0, 0, 1), 2)
    assert rep.apply_group(g, f) == (x * x + y * y + (z * z).scale(4)) ** 2
    assert rep.apply_group(RatMatrix.identity(3), f) == f


def test_apply_group_is_left_action():
    x, y, z = xyz()
    rep = FormsDerivation(3, 2)
    f = x * y + z * z + (x * z).scale(3)
    g = RatMatrix([[1, 2, 0], [0, 1, 0], [1, 0, 1]])
    h = RatMatrix([[2, 0, 1], [0, 1, 1], [0, 0, 1]])
    assert rep.apply_group(g @ h, f) == rep.apply_group(g, rep.apply_group(h, f))


def test_apply_group_conjugation_example():
    n = 4
    E = lambda a, b: RatMatrix.unit(n, a - 1, b - 1)
    A = RatMatrix.identity(n) + E(1, 4)
    rep = Conjugation(n)
    k = E(1, 1) + E(3, 3)
    assert rep.apply_group(A, k) == E(1, 1) + E(3, 3) - E(1, 4)


def test_apply_group_singular():
    with pytest.raises(Singular):
        LeftMult(2, 1).apply_group(RatMatrix([[1, 1], [1, 1]]), RatMatrix([[1], [0]]))


def test_shape_checked():
    with pytest.raises(ShapeMismatch):
        LeftMult(2, 1).apply_lie(RatMatrix.identity(3), RatMatrix([[1], [0]]))


def test_exponentiate_onps():
    assert exponentiate_onps((0, 0, 1), 3) == RatMatrix.diag([1, 1, 3])
    assert exponentiate_onps((1, -1), 2) == RatMatrix.diag([2, Fraction(1, 2)])
    t = Fraction(5, 7)
    assert exponentiate_onps((0, 1, 2, 2), t) == RatMatrix.diag([1, t, t * t, t * t])
    with pytest.raises(ZeroParameter):
        exponentiate_onps((1,), 0)


def test_central_characters():
    assert FormsDerivation(3, 4).central_character() == 4
    assert LeftMult(4, 3).central_character() == 1
    assert Conjugation(3).central_character() == 0


def test_rep_json_roundtrip():
    for rep in (FormsDerivation(3, 2), LeftMult(4, 3), Conjugation(2)):
        assert rep_from_json(rep.to_json()) == rep
