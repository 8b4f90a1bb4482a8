"""Named catalogue entries: each rebuilds one worked example and checks its values.

``run_entry(name)`` returns a report dict with ``checks`` (name -> bool, all
expected to hold), ``data`` (computed values) and ``discrepancies`` (printed
claims that the computation contradicts, kept separate from the checks).
"""

import random
from fractions import Fraction
from itertools import permutations

from .alignment import (
    alignment_dichotomy,
    boundary_recipe,
    col_blocks,
    correspondence,
    rectangular_partitions,
    row_blocks,
)
from .catalog import (
    GRENET_COL_WEIGHTS,
    GRENET_PERM_COL_WEIGHTS,
    GRENET_PERM_ROW_WEIGHTS,
    GRENET_ROW_WEIGHTS,
    LAMBDA1_WEIGHTS,
    LAMBDA2_WEIGHTS,
    _perm_sign,
    det_form,
    form_det,
    grenet_matrix,
    grenet_matrix_corrected,
    lambda1_basis,
    lambda2_basis,
    lambda2_identity_check,
    padded_perm,
    q1_form,
    q2_form,
    r2_form,
)
from .colimits import colimit_report, d_stabilizers, strictness_verdict
from .errors import InputError
from .forms import Conjugation, Form, FormsDerivation, LeftMult
from .grading import grade_vec, leading_term, parabolic
from .linalg import RatMatrix, Subspace, commutator, minimal_polynomial, is_semisimple
from .normal_cone import FullGL, ProbablyMember, Rejected, SubgroupGenerators, dk, membership_Jk
from .stabilizers import (
    bracket_closed,
    full_report,
    leading_term_algebra,
    lie_basis,
    orbit_tangent,
    stabilizer_algebra,
)
from .strata import face_of, face_restrict, intermediate_face, is_facet, support, support_dim


def E(n, a, b):
    """Matrix unit with 1-based indices."""
    return RatMatrix.unit(n, a - 1, b - 1)


def span(mats):
    return Subspace.span_matrices(mats)


def _vars(n):
    return [Form.variable(n, i) for i in range(n)]


# ---------------------------------------------------------------------------


def quartic():
    x, y, z = _vars(3)
    f = (x * x + y * y + z * z) ** 2
    g = (x * x + y * y) ** 2
    rep = FormsDerivation(3, 4)
    w = (0, 0, 1)
    rpt = full_report(rep, f, w)
    so3 = span([E(3, 1, 2) - E(3, 2, 1), E(3, 1, 3) - E(3, 3, 1), E(3, 2, 3) - E(3, 3, 2)])
    khat_ref = span([E(3, 1, 2) - E(3, 2, 1), E(3, 1, 3), E(3, 2, 3)])
    h_ref = span([E(3, 1, 2) - E(3, 2, 1), E(3, 1, 3), E(3, 2, 3), E(3, 3, 3)])
    s = x * x + y * y
    tangent_vectors = [s * (x * z).scale(2), s * (y * z).scale(2)]
    checks = {
        "z_is_g": rpt.z == g,
        "dim_Gf_3": rpt.K.dim == 3,
        "Gf_is_reference": rpt.K == so3,
        "dim_Gg_4": rpt.H.dim == 4,
        "Gg_is_reference": rpt.H == h_ref,
        "Khat_is_reference": rpt.Khat == khat_ref,
        "Hye_eq_Khat": rpt.Hye == rpt.Khat,
        "tangent_contains_reference": all(rpt.tangent.contains(rep.coords(v)) for v in tangent_vectors),
        **rpt.checks,
    }
    return {"data": {"dims": rpt.dims, "Khat": rpt.Khat, "y_e": rpt.y_e}, "checks": checks}


def ex21():
    n, w = 4, (0, 0, 1, 1)
    a = E(n, 1, 1) + E(n, 3, 3)
    b = E(n, 1, 2) + E(n, 3, 4)
    c = E(n, 2, 1) + E(n, 4, 3)
    d = E(n, 2, 2) + E(n, 4, 4)
    K = span([a, b, c, d])
    A = RatMatrix.identity(n) + E(n, 1, 4)
    Ainv = A.inverse()
    Kp = span([A @ m @ Ainv for m in (a, b, c, d)])
    # reference K' with parameters (a, b, c, d)
    Kp_ref = span([
        E(n, 1, 1) + E(n, 3, 3) - E(n, 1, 4),
        E(n, 1, 2) + E(n, 3, 4),
        E(n, 2, 1) + E(n, 4, 3) + E(n, 1, 3) - E(n, 2, 4),
        E(n, 2, 2) + E(n, 4, 4) + E(n, 1, 4),
    ])
    Khat = leading_term_algebra(K, w)
    Khatp = leading_term_algebra(Kp, w)
    khatp_ref = span([
        RatMatrix.identity(n),
        E(n, 1, 2) + E(n, 3, 4),
        E(n, 1, 3) - E(n, 2, 4),
        E(n, 1, 4),
    ])
    closed, _ = bracket_closed(Khatp)
    mats = lie_basis(Khatp)
    strictly_upper = all(
        all(commutator(p, q)[i, j] == 0 for i in range(n) for j in range(i + 1))
        for p in mats
        for q in mats
    )
    checks = {
        "Khat_eq_K": Khat == K,
        "Kprime_is_reference": Kp == Kp_ref,
        "Khat_prime_is_reference": Khatp == khatp_ref,
        "dim_Khat_prime_4": Khatp.dim == 4,
        "Khat_prime_bracket_closed": closed,
        "derived_algebra_strictly_upper": strictly_upper,
    }
    return {"data": {"Khat": Khat, "Khat_prime": Khatp}, "checks": checks}


def _lambda_coarsening(basis, weights):
    groups = {}
    for m, wt in zip(basis, weights):
        groups.setdefault(wt, []).append(m)
    return [(ms, wt) for wt, ms in sorted(groups.items())]


def det3():
    rep = FormsDerivation(9, 3)
    K = stabilizer_algebra(rep, det_form(3))
    out, checks = {"dim_K": K.dim}, {"dim_K_16": K.dim == 16}
    for label, basis, weights, Q in (
        ("lambda1", lambda1_basis(), LAMBDA1_WEIGHTS, q1_form()),
        ("lambda2", lambda2_basis(), LAMBDA2_WEIGHTS, q2_form()),
    ):
        res = boundary_recipe(3, _lambda_coarsening(basis, weights))
        Ki = stabilizer_algebra(rep, res.y)
        Khat = leading_term_algebra(Ki, res.weights)
        H = stabilizer_algebra(rep, res.Q)
        ell = Subspace([res.ell.flat()], 81)
        out[label] = {"d": res.d, "dim_stab_Q": res.dim_stab_Q, "dim_K": res.dim_K}
        checks[f"{label}_Q_matches_reference"] = res.Q == Q
        checks[f"{label}_dim_stab_Q_17"] = res.dim_stab_Q == 17
        checks[f"{label}_recipe_verdict"] = res.verdict
        checks[f"{label}_Khat_in_H"] = Khat.issubset(H)
        checks[f"{label}_ell_in_H"] = ell.issubset(H)
        checks[f"{label}_H_eq_Khat_plus_ell"] = Khat.sum(ell) == H and Khat.dim + 1 == H.dim
    y2 = boundary_recipe(3, _lambda_coarsening(lambda2_basis(), LAMBDA2_WEIGHTS)).y
    rpt = full_report(rep, y2, LAMBDA2_WEIGHTS)
    checks["lambda2_report_dim_H_17"] = rpt.H.dim == 17
    checks["Q2_six_terms_coeff_2"] = len(q2_form()) == 6 and all(c == 2 for _, c in q2_form().terms())
    out["lambda2_report"] = rpt.dims
    return {"data": out, "checks": checks}


def lambda2():
    ok, coeffs = lambda2_identity_check(detail=True)
    checks = {
        "identity": ok,
        "t2_coefficient_zero": 2 not in coeffs,
        "t1_is_Q2": coeffs.get(1) == q2_form(),
        "t3_is_R2": coeffs.get(3) == r2_form(),
        "R2_five_terms": len(r2_form()) == 5,
    }
    return {"data": {"t_powers": sorted(coeffs)}, "checks": checks}


# Frozen expansion of det_7 of the reference matrix (variables x11..x33, W).
GRENET_REFERENCE_DET = [
    (-1, (1, 0, 0, 0, 1, 0, 1, 0, 0, 4)),
    (1, (1, 0, 0, 0, 0, 1, 0, 1, 0, 4)),
    (1, (0, 1, 0, 1, 0, 0, 1, 0, 0, 4)),
    (-1, (0, 1, 0, 0, 0, 1, 0, 0, 1, 4)),
    (-1, (0, 0, 1, 1, 0, 0, 0, 1, 0, 4)),
    (1, (0, 0, 1, 0, 1, 0, 0, 0, 1, 4)),
]


def full_leibniz(entries):
    """All n! permutation terms, no pruning (the brute-force oracle)."""
    n = len(entries)
    nv = entries[0][0].n_vars
    total = Form.zero(nv, n)
    count = 0
    for p in permutations(range(n)):
        term = Form.constant(nv, _perm_sign(p))
        for i in range(n):
            term = term * entries[i][p[i]]
        total = total + term
        count += 1
    return total, count


def grenet_sign(brute=False):
    """The global sign s with det_7(corrected matrix) = s * W^4 perm_3."""
    mat = grenet_matrix_corrected()
    det = full_leibniz(mat)[0] if brute else form_det(mat)
    target = padded_perm(3, 7)
    for s in (1, -1):
        if det == target.scale(s):
            return s
    return None


def grenet(brute=False):
    mat = grenet_matrix_corrected()
    sign = grenet_sign(brute)
    reference = form_det(grenet_matrix())
    frozen = Form(10, 7, [(e, c) for c, e in GRENET_REFERENCE_DET])
    # det_7 of the reference matrix equals -det_3 once x31 and x33 are swapped
    swap = _vars(10)
    swap[6], swap[8] = swap[8], swap[6]
    d3 = Form(10, 3, [(e + (0,), c) for e, c in det_form(3).terms()]) * Form.variable(10, 9) ** 4
    perm_rects = rectangular_partitions(GRENET_PERM_ROW_WEIGHTS, GRENET_PERM_COL_WEIGHTS, extra=0, pad_index=7)
    det_rects = rectangular_partitions(GRENET_ROW_WEIGHTS, GRENET_COL_WEIGHTS)
    example_rects = rectangular_partitions((0, 1, 1, 1, 2, 2, 2), (0, -1, -1, -1, -2, -2, -2))
    phi = set(correspondence(perm_rects, det_rects))
    perm_of = {cell: k for k, r in enumerate(perm_rects) for cell in r.cells()}
    det_of = {cell: k for k, r in enumerate(det_rects) for cell in r.cells()}
    support_ok = True
    for i, row in enumerate(mat, start=1):
        for j, entry in enumerate(row, start=1):
            for e, _ in entry.terms():
                v = e.index(1)
                src = (7, 7) if v == 9 else (v // 3 + 1, v % 3 + 1)
                support_ok &= (perm_of[src], det_of[(i, j)]) in phi
    checks = {
        "corrected_det_is_padded_perm": sign is not None,
        "reference_det_regression": reference == frozen,
        "reference_det_is_minus_det3_after_swap": reference.substitute(swap) == -d3,
        "perm_row_blocks": row_blocks(perm_rects) == [(1,), (2,), (3,), (7,)],
        "perm_col_blocks": col_blocks(perm_rects) == [(1, 2, 3), (7,)],
        "det_blocks": row_blocks(det_rects) == [(1,), (2, 3, 4), (5, 6, 7)]
        and col_blocks(det_rects) == [(1,), (2, 3, 4), (5, 6, 7)],
        "example_weights_det_blocks": row_blocks(example_rects) == [(1,), (2, 3, 4), (5, 6, 7)],
        "torus_in_det7_stabilizer": sum(GRENET_ROW_WEIGHTS) + sum(GRENET_COL_WEIGHTS) == 0,
        "torus_in_perm3_stabilizer": sum(GRENET_PERM_ROW_WEIGHTS) + sum(GRENET_PERM_COL_WEIGHTS) == 0,
        "support_respects_correspondence": support_ok,
    }
    return {
        "data": {"sign": sign, "brute_force": brute, "reference_det": reference, "phi": sorted(phi)},
        "checks": checks,
        "discrepancies": {
            "reference_matrix": "det_7 of the reference matrix is -det_3 (after x31 <-> x33), not +-perm_3"
        },
    }


def _matrix_of_forms(n):
    x = _vars(n * n)
    return [[x[a * n + b] for b in range(n)] for a in range(n)]


def _mat_mul_forms(P, Q):
    n = len(P)
    return [[sum((P[i][k] * Q[k][j] for k in range(1, n)), P[i][0] * Q[0][j]) for j in range(n)] for i in range(n)]


def conjugation_data():
    C = RatMatrix([[1, 0, 1], [1, 1, 0], [0, 1, 1]])
    return C, (0, 1, 2)


def conjugation(samples=40, seed=0):
    rep = Conjugation(3)
    C, w = conjugation_data()
    gv = grade_vec(rep, w, C)
    d, z = leading_term(gv)
    ye = gv[sorted(gv.components)[1]]
    N1 = E(3, 1, 3)
    I = RatMatrix.identity(3)
    X = _matrix_of_forms(3)
    X2 = _mat_mul_forms(X, X)
    X3 = _mat_mul_forms(X2, X)
    D1X2 = RatMatrix([[dk(X2[i][j], z, ye, 1, rep) for j in range(3)] for i in range(3)])
    D1X3 = RatMatrix([[dk(X3[i][j], z, ye, 1, rep) for j in range(3)] for i in range(3)])
    sampler = FullGL(3)
    x3_results = [membership_Jk(rep, X3[i][j], 1, z, ye, sampler, samples, seed) for i in range(3) for j in range(3)]
    x2_results = [membership_Jk(rep, X2[i][j], 1, z, ye, sampler, samples, seed) for i in range(3) for j in range(3)]
    p = minimal_polynomial(C)
    checks = {
        "C_distinct_eigenvalues": len(p) == 4 and is_semisimple(C),
        "z_is_N1": d == -2 and z == N1,
        "y_e_is_I": ye == I,
        "D1_X2_is_2N1": D1X2 == N1.scale(2),
        "D1_X3_is_zero": D1X3.is_zero(),
        "X3_entries_accepted": all(isinstance(r, ProbablyMember) for r in x3_results),
        "X2_rejected_at_identity": any(isinstance(r, Rejected) and r.sample_index == 0 for r in x2_results),
    }
    x2_idx = {f"{i + 1}{j + 1}": (r.sample_index if isinstance(r, Rejected) else None)
              for (i, j), r in zip([(i, j) for i in range(3) for j in range(3)], x2_results)}
    return {"data": {"C": C, "D1_X2": D1X2, "X2_rejection_index": x2_idx}, "checks": checks}


def rotation_scaling(param):
    """g(theta, r) with the rational point (cos, sin) = ((1 - s^2), 2s) / (1 + s^2)."""
    s, r = param
    s, r = Fraction(s), Fraction(r)
    c, sn = (1 - s * s) / (1 + s * s), 2 * s / (1 + s * s)
    return RatMatrix([[r * c, r * sn, 0], [-r * sn, r * c, 0], [0, 0, r]])


def quadric_sampler():
    params = [(s, r) for s in (Fraction(1, 2), 2, 3, Fraction(-1, 3), -2) for r in (1, 2, -1, Fraction(1, 3))]
    return SubgroupGenerators([rotation_scaling], params)


def quadric(samples=40, seed=0):
    rep = LeftMult(3, 1)
    z = RatMatrix.zeros(3, 1)
    ye = RatMatrix([[1], [0], [1]])
    x, y, zz = _vars(3)
    sampler = quadric_sampler()
    f2 = x * x
    f3 = x * x + y * y - zz * zz
    grid = [(a, b, c) for a in (-1, 0, 2) for b in (-1, 0, 3) for c in (-2, 0, 1) if (a, b, c) != (0, 0, 0)]
    d1_ok = all(dk(Form.linear([a, b, c]), z, ye, 1, rep) == a + c for a, b, c in grid)
    f1_rejected = all(isinstance(membership_Jk(rep, Form.linear(t), 1, z, ye, sampler, samples, seed), Rejected) for t in grid)
    r2 = membership_Jk(rep, f2, 2, z, ye, sampler, samples, seed)
    r3 = membership_Jk(rep, f3, 2, z, ye, sampler, samples, seed)
    checks = {
        "D1_f1_is_a_plus_c": d1_ok,
        "f1_rejected_for_nonzero_abc": f1_rejected,
        "D2_f2_is_1": dk(f2, z, ye, 2, rep) == 1,
        "f2_rejected": isinstance(r2, Rejected) and r2.sample_index == 0,
        "D2_f3_is_0": dk(f3, z, ye, 2, rep) == 0,
        "f3_probably_member": isinstance(r3, ProbablyMember) and r3.samples == samples + 1,
    }
    return {"data": {"f2": r2, "f3": r3}, "checks": checks}


def strata():
    x1, x2, x3 = _vars(3)
    rep = FormsDerivation(3, 2)
    y = x1 * x2 + x1 * x3 + x2 * x3 + x3 * x3
    cs = support(rep, y)
    F0 = face_of(cs, (0, 0, 1))
    res = intermediate_face(cs, F0, (0, 0, 1))
    yF = face_restrict(rep, y, res.face)
    checks = {
        "support_as_listed": set(cs.chars) == {(1, 1, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)},
        "z_is_x1x2": face_restrict(rep, y, F0) == x1 * x2,
        "s_is_1_m1_0": res.s == (1, -1, 0),
        "epsilon_1": res.epsilon == 1,
        "t_prime": res.t_prime == (1, -1, 1),
        "face": set(res.face.members.chars) == {(1, 1, 0), (0, 1, 1)},
        "y_F": yF == x1 * x2 + x2 * x3,
        "dims_3_2_1": res.dims == (3, 2, 1),
        "singleton_not_facet": not is_facet(F0),
    }
    return {"data": {"support": cs, "t_prime": res.t_prime, "epsilon": res.epsilon, "y_F": yF}, "checks": checks}


def det3_facet():
    rep = FormsDerivation(9, 3)
    res = boundary_recipe(3, _lambda_coarsening(lambda2_basis(), LAMBDA2_WEIGHTS))
    cq, cr, cd = support(rep, q2_form()), support(rep, r2_form()), support(rep, res.y)
    face = face_of(cd, res.ell.flat()[::10])
    dims = (support_dim(cq), support_dim(cr), support_dim(cd))
    checks = {
        "det_is_Q2_plus_R2": res.y == q2_form() + r2_form(),
        "dims_6_4_7": dims == (6, 4, 7),
        "face_of_ell_is_Q2": face.members == cq,
        "Q2_is_facet": is_facet(face),
    }
    return {"data": {"dims": dims, "support_Q2": cq, "support_R2": cr}, "checks": checks}


POPOV_Y = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]]
POPOV_W = (0, 1, 2, 2)


def popov(colimit=True):
    rep = LeftMult(4, 3)
    y = RatMatrix(POPOV_Y)
    rpt = full_report(rep, y, POPOV_W)
    P, L, U = parabolic(POPOV_W)
    col = lambda c: span([E(4, a, c) for a in range(1, 5)])
    H_ref = col(2).sum(col(3)).sum(col(4))
    checks = {
        "dims_K_H_Hye": (rpt.K.dim, rpt.H.dim, rpt.Hye.dim) == (4, 12, 8),
        "K_eq_Khat_column_4": rpt.K == rpt.Khat == col(4),
        "H_is_reference": rpt.H == H_ref,
        "Hye_is_reference": rpt.Hye == col(3).sum(col(4)),
        "tangent_is_first_column": rpt.tangent == Subspace.coordinate(12, [0, 3, 6, 9]),
        **rpt.checks,
    }
    data = {"dims": rpt.dims, "parabolic_dims": {"P": P.dim, "L": L.dim, "U": U.dim}, "K_cap_P": rpt.K.intersect(P)}
    if colimit:
        c = colimit_report(rep, y, POPOV_W, bound=rpt.H.dim - rpt.Khat.dim)
        e1 = lambda col_: RatMatrix.unit(4, 0, col_, cols=3)
        checks.update({
            "Gyd_is_gl4": c.Gyd == Subspace.full(16),
            "F_cosets": c.F == span([E(4, 1, 2), E(4, 1, 3), E(4, 2, 3)]),
            "TW0": c.TW == Subspace([e1(1).flat(), e1(2).flat()], 12),
            "codim_2": c.codim == 2,
            "strict": strictness_verdict(c)["strict_tangent_excess"],
        })
        data["colimit"] = c
    return {"data": data, "checks": checks}


def cubic_form(a, b):
    x, y, z = _vars(3)
    return x * x * (x - y) + (x - 2 * y) ** 2 * z + z * z * (x.scale(a) + y.scale(b)) + z**3


def _small_pairs(bound=3):
    pairs = [(a, b) for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)]
    return sorted(pairs, key=lambda p: (abs(p[0]) + abs(p[1]), -p[0], -p[1]))


def cubic_parameters():
    """First small integer pair with trivial stabilizer, in order of |a| + |b|."""
    rep = FormsDerivation(3, 3)
    for a, b in _small_pairs():
        if stabilizer_algebra(rep, cubic_form(a, b)).dim == 0:
            return a, b
    raise InputError("no small (a, b) gives a trivial stabilizer")


CUBIC_AB = (0, 0)


def cubic():
    rep = FormsDerivation(3, 3)
    a, b = CUBIC_AB
    p = cubic_form(a, b)
    w = (0, 0, 1)
    rpt = full_report(rep, p, w)
    x, y, z = _vars(3)
    c = colimit_report(rep, p, w, bound=rpt.H.dim - rpt.Khat.dim)
    # rows x d/dx, y d/dx, x d/dy, y d/dy applied to p-hat, in x^3, x^2 y, x y^2, y^3
    ops = [E(3, 1, 1), E(3, 2, 1), E(3, 1, 2), E(3, 2, 2)]
    mons = [x**3, x * x * y, x * y * y, y**3]
    table = RatMatrix([[rep.apply_lie(g, rpt.z).coeff(m.terms()[0][0]) for m in mons] for g in ops])
    reference = RatMatrix([[3, -2, 0, 0], [0, 3, -2, 0], [-1, 0, 0, 0], [0, -1, 0, 0]])
    witness = (x - 2 * y) ** 2 * y
    y_dz = E(3, 2, 3)
    checks = {
        "frozen_ab_is_first_found": cubic_parameters() == CUBIC_AB,
        "K_zero": rpt.K.dim == 0,
        "p_hat": rpt.z == (x - y) * x * x,
        "q": rpt.y_e == (x - 2 * y) ** 2 * z,
        "dim_H_4": rpt.H.dim == 4,
        "tangent_table_is_reference": table == reference,
        "tangent_table_rank_3": table.rank() == 3 and c.G0z.dim == 3,
        "y_dz_in_Gy0": d_stabilizers(rep, p, w, 0).contains(y_dz.flat()),
        "y_dz_in_F": c.F.contains(y_dz.flat()),
        "witness_not_in_G0z": not c.G0z.contains(rep.coords(witness)),
        "witness_in_TW": c.TW.contains(rep.coords(witness)),
        "strict": strictness_verdict(c)["strict_tangent_excess"],
        **rpt.checks,
    }
    return {
        "data": {"ab": CUBIC_AB, "dims": rpt.dims, "Hye": rpt.Hye, "colimit": c},
        "checks": checks,
        "discrepancies": {
            "Hq_zero": {
                "claimed": 0,
                "computed": rpt.Hye.dim,
                "note": "x d/dz sends q to x(x-2y)^2, which lies in gl(x,y) . p-hat",
            }
        },
    }


def generic_conjugate(seed=1, bound=3):
    """A random integer conjugate of the quartic, with its conjugating matrix."""
    x, y, z = _vars(3)
    f = (x * x + y * y + z * z) ** 2
    rep = FormsDerivation(3, 4)
    rng = random.Random(seed)
    while True:
        g = RatMatrix([[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)])
        if g.det() != 0:
            return rep, rep.apply_group(g, f), g


def dichotomy(seed=0):
    rep = FormsDerivation(9, 3)
    y = boundary_recipe(3, _lambda_coarsening(lambda2_basis(), LAMBDA2_WEIGHTS)).y
    rb = alignment_dichotomy(rep, y, LAMBDA2_WEIGHTS, seed=seed)
    rep3, fg, g = generic_conjugate()
    w = (0, 1, 2)
    K = stabilizer_algebra(rep3, fg)
    P, _, _ = parabolic(w)
    ra = alignment_dichotomy(rep3, fg, w, seed=seed)
    checks = {
        "det3_lambda2_case_B": rb.verdict == "CaseB" and all(getattr(rb, "checks", {}).values()),
        "generic_placement": K.intersect(P).dim == 0,
        "generic_case_A": ra.verdict == "CaseA",
    }
    return {"data": {"det3_lambda2": rb, "generic": ra, "g": g}, "checks": checks}


ENTRIES = {
    "quartic": quartic,
    "ex21": ex21,
    "det3": det3,
    "lambda2": lambda2,
    "grenet": grenet,
    "conjugation": conjugation,
    "quadric": quadric,
    "strata": strata,
    "det3-facet": det3_facet,
    "popov": popov,
    "cubic": cubic,
    "dichotomy": dichotomy,
}


def run_entry(name, **kwargs):
    if name not in ENTRIES:
        raise InputError(f"unknown catalogue entry {name!r}; known: {', '.join(sorted(ENTRIES))}")
    out = ENTRIES[name](**kwargs)
    out.setdefault("discrepancies", {})
    out["name"] = name
    out["ok"] = all(out["checks"].values())
    return out
