"""Exact constructors for the worked examples, plus named catalogue entries.

Variable order conventions:

* det_form(n), perm_form(m): x_{ab} is variable a*n + b (row-major, 0-based).
* padded_perm(m, n): the m^2 row-major entries followed by the padding variable.
* q1_form, q2_form, r2_form: variables x1..x9 in the reference layout.
* grenet_matrix: entries are linear forms in x11..x33 (row-major, indices 0..8)
  and a padding variable (index 9) standing in for every constant-1 entry,
  so that det of the matrix is homogeneous of degree 7.

The reference Grenet matrix does not expand to +-perm_3: with its first row
(x31, -x32, x33) the determinant is, up to sign and relabelling, det_3.
grenet_matrix() keeps the reference entries verbatim; grenet_matrix_corrected() reverses
the first row to (x33, x32, x31) and drops the signs, which gives
det_7 = W^4 perm_3 exactly.
"""

from itertools import permutations

from .errors import InputError, TooLarge
from .forms import Form
from .linalg import RatMatrix


def _perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _expansion(n, signed):
    x = [Form.variable(n * n, i) for i in range(n * n)]
    out = Form.zero(n * n, n)
    for p in permutations(range(n)):
        term = Form.constant(n * n, _perm_sign(p) if signed else 1)
        for i in range(n):
            term = term * x[i * n + p[i]]
        out = out + term
    return out


def det_form(n):
    if n > 5:
        raise TooLarge("det_n is only expanded for n <= 5")
    if n < 1:
        raise InputError("n must be positive")
    return _expansion(n, True)


def perm_form(m):
    if m > 5:
        raise TooLarge("perm_m is only expanded for m <= 5")
    if m < 1:
        raise InputError("m must be positive")
    return _expansion(m, False)


def padded_perm(m, n):
    """W_pad^{n-m} * perm_m(W) in m^2 + 1 variables."""
    if n < m:
        raise InputError("padding needs n >= m")
    p = perm_form(m)
    k = m * m + 1
    lifted = Form(k, m, [(e + (0,), c) for e, c in p.terms()])
    return lifted * Form.variable(k, m * m) ** (n - m)


def form_det(entries):
    """Leibniz expansion of the determinant of a square matrix of forms.

    Zero entries prune the permutation search, so sparse matrices expand
    quickly; every nonzero term is still formed explicitly.
    """
    n = len(entries)
    nz = [[j for j in range(n) if not entries[i][j].is_zero()] for i in range(n)]
    sample = entries[0][0]
    nvars = sample.n_vars
    width = sample.degree
    total = {}

    def walk(i, used, perm, prod):
        if i == n:
            sign = _perm_sign(perm)
            for e, c in prod._terms.items():
                total[e] = total.get(e, 0) + sign * c
            return
        for j in nz[i]:
            if j not in used:
                used.add(j)
                perm.append(j)
                walk(i + 1, used, perm, prod * entries[i][j])
                perm.pop()
                used.discard(j)

    walk(0, set(), [], Form.constant(nvars, 1))
    return Form(nvars, width * n, [(e, c) for e, c in total.items() if c])


def q1_matrix():
    x = [Form.variable(9, i) for i in range(9)]
    return [[x[0], x[1], x[2]], [x[3], x[4], x[5]], [x[6], x[7], -x[4] - x[0]]]


def q1_form():
    return form_det(q1_matrix())


def _poly9(spec):
    return Form(9, 3, [(e, c) for c, e in spec])


def _exp(*idx):
    e = [0] * 9
    for i in idx:
        e[i - 1] += 1
    return tuple(e)


def q2_form():
    return _poly9(
        [
            (2, _exp(4, 1, 1)),
            (2, _exp(5, 2, 2)),
            (2, _exp(6, 3, 3)),
            (2, _exp(7, 1, 2)),
            (2, _exp(8, 2, 3)),
            (2, _exp(9, 1, 3)),
        ]
    )


def r2_form():
    return _poly9(
        [
            (8, _exp(4, 5, 6)),
            (-2, _exp(6, 7, 7)),
            (-2, _exp(4, 8, 8)),
            (-2, _exp(5, 9, 9)),
            (2, _exp(7, 8, 9)),
        ]
    )


# Adapted bases of the 3 x 3 matrix space. Coordinate u_k multiplies basis[k].

def lambda2_basis():
    """Antisymmetric then symmetric basis matching the reference lambda_2 matrix."""
    E = lambda a, b: RatMatrix.unit(3, a - 1, b - 1)
    return [
        E(1, 2) - E(2, 1),
        E(3, 1) - E(1, 3),
        E(2, 3) - E(3, 2),
        E(3, 3).scale(2),
        E(2, 2).scale(2),
        E(1, 1).scale(2),
        E(2, 3) + E(3, 2),
        E(1, 2) + E(2, 1),
        E(1, 3) + E(3, 1),
    ]


LAMBDA2_WEIGHTS = (0, 0, 0, 1, 1, 1, 1, 1, 1)


def lambda1_basis():
    """Trace-zero completion matching the reference Q1 matrix, then the identity."""
    E = lambda a, b: RatMatrix.unit(3, a - 1, b - 1)
    return [
        E(1, 1) - E(3, 3),
        E(1, 2),
        E(1, 3),
        E(2, 1),
        E(2, 2) - E(3, 3),
        E(2, 3),
        E(3, 1),
        E(3, 2),
        RatMatrix.identity(3),
    ]


LAMBDA1_WEIGHTS = (0, 0, 0, 0, 0, 0, 0, 0, 1)


def lambda2_matrix():
    """The reference matrix with the parameter t at index 9 and a homogenizing
    variable s (index 10) multiplying the weight-zero entries; every entry has degree 2."""
    n = 11
    x = [Form.variable(n, i) for i in range(n)]
    t, s = x[9], x[10]
    X = lambda i: x[i - 1]
    return [
        [t * X(6) * 2, t * X(8) + s * X(1), t * X(9) - s * X(2)],
        [t * X(8) - s * X(1), t * X(5) * 2, t * X(7) + s * X(3)],
        [t * X(9) + s * X(2), t * X(7) - s * X(3), t * X(4) * 2],
    ]


def _lift_t(f, t_power, s_power):
    return Form(11, f.degree + t_power + s_power, [(e + (t_power, s_power), c) for e, c in f.terms()])


def lambda2_identity_check(detail=False):
    """det(lambda_2 matrix) == t Q2 + t^3 R2, expanded symbolically (s = 1)."""
    lhs = form_det(lambda2_matrix())
    rhs = _lift_t(q2_form(), 1, 2) + _lift_t(r2_form(), 3, 0)
    if not detail:
        return lhs == rhs
    by_t = {}
    for e, c in lhs.terms():
        by_t.setdefault(e[9], []).append((e[:9], c))
    coeffs = {k: Form(9, 3, v) for k, v in by_t.items()}
    return lhs == rhs, coeffs


def grenet_matrix():
    n = 10
    x = [Form.variable(n, i) for i in range(n)]
    one = x[9]
    zero = Form.zero(n, 1)
    X = lambda a, b: x[(a - 1) * 3 + (b - 1)]
    return [
        [zero, zero, zero, zero, X(3, 1), -X(3, 2), X(3, 3)],
        [X(1, 1), one, zero, zero, zero, zero, zero],
        [X(1, 2), zero, one, zero, zero, zero, zero],
        [X(1, 3), zero, zero, one, zero, zero, zero],
        [zero, -X(2, 2), X(2, 1), zero, one, zero, zero],
        [zero, -X(2, 3), zero, X(2, 1), zero, one, zero],
        [zero, zero, -X(2, 3), X(2, 2), zero, zero, one],
    ]


def grenet_matrix_corrected():
    n = 10
    x = [Form.variable(n, i) for i in range(n)]
    one = x[9]
    zero = Form.zero(n, 1)
    X = lambda a, b: x[(a - 1) * 3 + (b - 1)]
    return [
        [zero, zero, zero, zero, X(3, 3), X(3, 2), X(3, 1)],
        [X(1, 1), one, zero, zero, zero, zero, zero],
        [X(1, 2), zero, one, zero, zero, zero, zero],
        [X(1, 3), zero, zero, one, zero, zero, zero],
        [zero, X(2, 2), X(2, 1), zero, one, zero, zero],
        [zero, X(2, 3), zero, X(2, 1), zero, one, zero],
        [zero, zero, X(2, 3), X(2, 2), zero, zero, one],
    ]


# Row/column weights of a torus in the stabilizer of det_7 that is compatible
# with grenet_matrix_corrected; the matching permanent-side torus acts on x_ab
# with weight GRENET_PERM_ROW_WEIGHTS[a] and on the padding variable trivially.
GRENET_ROW_WEIGHTS = (0, 1, 1, 1, 3, 3, 3)
GRENET_COL_WEIGHTS = (0, -1, -1, -1, -3, -3, -3)
GRENET_PERM_ROW_WEIGHTS = (1, 2, -3)
GRENET_PERM_COL_WEIGHTS = (0, 0, 0)
