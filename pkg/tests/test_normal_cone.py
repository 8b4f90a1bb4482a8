from fractions import Fraction

import pytest

from orbitlim.entries import cubic_form, quadric_sampler
from orbitlim.errors import NotTangent, PrecheckFailed
from orbitlim.forms import Conjugation, Form, FormsDerivation, LeftMult
from orbitlim.grading import grade_vec
from orbitlim.linalg import RatMatrix, Subspace
from orbitlim.normal_cone import (
    FullGL,
    ProbablyMember,
    Rejected,
    dk,
    hye_invariance_check,
    leibniz_check,
    membership_Jk,
    tangent_insensitivity_check,
    vanishing_polynomials,
)
from orbitlim.stabilizers import full_report, lie_basis


def matrix_powers(n):
    x = [Form.variable(n * n, i) for i in range(n * n)]
    X = [[x[a * n + b] for b in range(n)] for a in range(n)]

    def mul(P, Q):
        return [[sum((P[i][k] * Q[k][j] for k in range(1, n)), P[i][0] * Q[0][j]) for j in range(n)] for i in range(n)]

    X2 = mul(X, X)
    return X2, mul(X2, X)


N1 = RatMatrix.unit(3, 0, 2)
I3 = RatMatrix.identity(3)


def quartic_data():
    x, y, z = [Form.variable(3, i) for i in range(3)]
    rep = FormsDerivation(3, 4)
    rpt = full_report(rep, (x * x + y * y + z * z) ** 2, (0, 0, 1))
    return rep, rpt, (x, y, z)


def test_dk_conjugation_example():
    rep = Conjugation(3)
    X2, X3 = matrix_powers(3)
    d1 = [[dk(X2[i][j], N1, I3, 1, rep) for j in range(3)] for i in range(3)]
    assert RatMatrix(d1) == N1.scale(2)
    assert all(dk(X3[i][j], N1, I3, 1, rep) == 0 for i in range(3) for j in range(3))


def test_dk_linear_second_order_zero():
    f = Form.linear([3, -1, 2])
    assert dk(f, (1, 2, 3), (4, 5, 6), 2) == 0
    assert dk(f, (1, 2, 3), (4, 5, 6), 1) == 3 * 4 - 5 + 12
    assert dk(f, (1, 2, 3), (4, 5, 6), 0) == f.evaluate((1, 2, 3))


def test_dk_matches_one_ps_expansion():
    # t^2 lambda(t) C, homogenized with s so every entry has degree 4 in (t, s)
    C = RatMatrix([[1, 0, 1], [1, 1, 0], [0, 1, 1]])
    w = (0, 1, 2)
    t, s = Form.variable(2, 0), Form.variable(2, 1)
    images = []
    for a in range(3):
        for b in range(3):
            e = w[a] - w[b] + 2
            images.append((t ** e * s ** (4 - e)).scale(C[a, b]) if C[a, b] else Form.zero(2, 4))
    X2, _ = matrix_powers(3)
    f = X2[0][2]
    series = f.substitute(images)
    assert series.coeff((0, 8)) == 0 and series.coeff((1, 7)) == 0
    assert series.coeff((2, 6)) == dk(f, N1, I3, 1, Conjugation(3)) == 2


def test_leibniz_examples():
    x = Form.variable(2, 0)
    assert leibniz_check(x, x, (0, 0), (1, 0), 1, 1)
    assert dk(x * x, (0, 0), (1, 0), 2) == 1
    a, b, c = [Form.variable(3, i) for i in range(3)]
    f3 = a * a + b * b - c * c
    assert leibniz_check(f3, f3, (0, 0, 0), (1, 0, 1), 2, 2)
    assert dk(f3 * f3, (0, 0, 0), (1, 0, 1), 4) == 0


def test_leibniz_conjugation_products():
    rep = Conjugation(3)
    X2, X3 = matrix_powers(3)
    for i in range(3):
        for j in range(3):
            assert leibniz_check(X2[i][j], X3[j][i], N1, I3, 1, 1, rep)


def test_quadric_membership():
    rep = LeftMult(3, 1)
    z = RatMatrix.zeros(3, 1)
    ye = RatMatrix([[1], [0], [1]])
    x, y, zz = [Form.variable(3, i) for i in range(3)]
    sampler = quadric_sampler()
    r2 = membership_Jk(rep, x * x, 2, z, ye, sampler)
    assert isinstance(r2, Rejected)
    assert r2.sample_index == 0 and r2.value == 1
    r3 = membership_Jk(rep, x * x + y * y - zz * zz, 2, z, ye, sampler)
    assert isinstance(r3, ProbablyMember)
    r1 = membership_Jk(rep, Form.linear([2, 5, -1]), 1, z, ye, sampler)
    assert isinstance(r1, Rejected) and r1.sample_index == 0 and r1.value == 1


def test_conjugation_membership():
    rep = Conjugation(3)
    X2, X3 = matrix_powers(3)
    sampler = FullGL(3)
    res = membership_Jk(rep, X3[1][2], 1, N1, I3, sampler, n_samples=10, seed=3)
    assert isinstance(res, ProbablyMember)
    assert res.samples == 11
    res = membership_Jk(rep, X2[0][2], 1, N1, I3, sampler, n_samples=10)
    assert isinstance(res, Rejected) and res.value == 2


def test_membership_precheck():
    rep = LeftMult(2, 1)
    f = Form.linear([1, 1])
    with pytest.raises(PrecheckFailed):
        membership_Jk(rep, f, 1, RatMatrix([[1], [0]]), RatMatrix([[0], [1]]), FullGL(2))


def test_quartic_ideal_generators():
    rep, rpt, _ = quartic_data()
    assert vanishing_polynomials(rep, rpt.z, 2) == []
    polys = vanishing_polynomials(rep, rpt.z, 3, weight=(4, 4, 4))
    assert len(polys) == 13
    zc = rep.coords(rpt.z)
    assert all(p.evaluate(zc) == 0 for p in polys)


def test_tangent_insensitivity_quartic():
    rep, rpt, (x, y, z) = quartic_data()
    polys = vanishing_polynomials(rep, rpt.z, 3, weight=(4, 4, 4))
    vprime = (x * x + y * y) * x * z
    for f in polys[:4]:
        assert tangent_insensitivity_check(rep, f, 1, rpt.z, rpt.y_e, vprime)
    assert tangent_insensitivity_check(rep, polys[0], 1, rpt.z, rpt.y_e, rep.zero())
    with pytest.raises(NotTangent):
        tangent_insensitivity_check(rep, polys[0], 1, rpt.z, rpt.y_e, z ** 4)


def test_tangent_insensitivity_conjugation():
    rep = Conjugation(3)
    X2, X3 = matrix_powers(3)
    g = RatMatrix([[1, -2, 0], [3, 1, 1], [0, 2, -1]])
    vprime = g @ N1 - N1 @ g
    for F in (X2, X3):
        for i in range(3):
            for j in range(3):
                assert tangent_insensitivity_check(rep, F[i][j], 1, N1, I3, vprime)


def test_hye_invariance_quartic():
    rep, rpt, _ = quartic_data()
    polys = vanishing_polynomials(rep, rpt.z, 3, weight=(4, 4, 4))
    assert rpt.Hye.dim == 3
    for f in polys:
        assert hye_invariance_check(rep, f, 1, rpt.z, rpt.y_e, rpt.Hye)
    assert hye_invariance_check(rep, polys[0], 1, rpt.z, rpt.y_e, Subspace.zero(9))


# A cubic in the coefficients of ternary cubics vanishing on the orbit of x^2 (x - y),
# found by interpolation; coordinates follow the descending-lex monomial order.
CUBIC_IDEAL_ELEMENT = [
    ((1, 0, 0, 1, 0, 0, 0, 1, 0, 0), 1),
    ((1, 0, 0, 0, 1, 0, 1, 0, 0, 0), Fraction(-3, 2)),
    ((0, 2, 0, 0, 0, 0, 0, 1, 0, 0), Fraction(-1, 3)),
    ((0, 1, 1, 0, 0, 0, 1, 0, 0, 0), 1),
    ((0, 1, 0, 1, 1, 0, 0, 0, 0, 0), Fraction(1, 6)),
    ((0, 0, 1, 2, 0, 0, 0, 0, 0, 0), Fraction(-1, 3)),
]


def test_hye_invariance_detects_outside_element():
    rep = FormsDerivation(3, 3)
    rpt = full_report(rep, cubic_form(0, 0), (0, 0, 1))
    f = Form(10, 3, CUBIC_IDEAL_ELEMENT)
    sampler = FullGL(3, entry_bound=3)
    import random

    rng = random.Random(5)
    for _ in range(10):
        assert f.evaluate(rep.coords(rep.apply_group(sampler.sample(rng), rpt.z))) == 0
    assert hye_invariance_check(rep, f, 1, rpt.z, rpt.y_e, rpt.Hye)
    outside = [h for h in lie_basis(rpt.H) if not rpt.Hye.contains(h.flat())]
    res = hye_invariance_check(rep, f, 1, rpt.z, rpt.y_e, Subspace.span_matrices(outside[:1]))
    assert not res
    assert res.witness == outside[0] and res.value == Fraction(16, 3)
