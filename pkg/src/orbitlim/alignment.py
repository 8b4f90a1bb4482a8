"""Semisimple elements of K ∩ P(lambda), unipotent conjugation into the Levi,
the Case A / Case B dichotomy, rectangular partitions, block
triangularization and the boundary-form recipe for det_n.
"""

import random
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    DegenerateSelection,
    InputError,
    InvariantViolation,
    IrrationalSpectrum,
    NoSolution,
    NotInParabolic,
    NotSemisimple,
)
from .forms import Form, FormsDerivation
from .grading import as_weights, ell_bar, grade_lie, grade_vec, leading_term, lie_degree_subspace, parabolic
from .linalg import (
    ONE,
    ZERO,
    RatMatrix,
    Subspace,
    exp_nilpotent,
    is_semisimple,
    minimal_polynomial,
    nullspace,
    poly_deriv,
    poly_gcd,
    rational_roots,
    sylvester_solve,
)
from .stabilizers import leading_term_algebra, lie_basis, stabilizer_algebra


@dataclass
class CaseA:
    certificate: dict

    verdict = "CaseA"


@dataclass
class CaseB:
    k: RatMatrix
    u: RatMatrix
    k_conj: RatMatrix
    checks: dict = field(default_factory=dict)

    verdict = "CaseB"


@dataclass
class Inconclusive:
    samples_tried: int

    verdict = "Inconclusive"


def conjugate_into_levi(k, w):
    """Return (u, u k u^{-1}) with u in U(lambda) and u k u^{-1} of pure degree 0."""
    n = k.rows
    ws = as_weights(w, n)
    comps = grade_lie(ws, k).components
    if any(j < 0 for j in comps):
        raise NotInParabolic("element has a negative-degree component")
    if not is_semisimple(k):
        raise NotSemisimple("element is not semisimple")
    k0 = comps.get(0, RatMatrix.zeros(n))
    u = RatMatrix.identity(n)
    current = k
    while True:
        pos = {j: c for j, c in grade_lie(ws, current).components.items() if j > 0}
        if not pos:
            break
        j = min(pos)
        try:
            sol = sylvester_solve(k0, k0, pos[j])
        except NoSolution as exc:
            raise InvariantViolation(f"degree-{j} peeling step has no solution", witness=pos[j]) from exc
        x = grade_lie(ws, sol).components.get(j)
        if x is None or not (k0 @ x - x @ k0) == pos[j]:
            raise InvariantViolation(f"degree-{j} peeling step left a residue", witness=pos[j])
        ex = exp_nilpotent(x)
        current = ex @ current @ exp_nilpotent(-x)
        u = ex @ u
    return u, current


def _random_combination(rng, mats, bound=3):
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in mats]
        if any(coeffs):
            break
    total = RatMatrix.zeros(mats[0].rows)
    for c, m in zip(coeffs, mats):
        if c:
            total = total + m.scale(c)
    return total


def alignment_dichotomy(rep, y, w, seed=0, max_samples=64):
    ws = as_weights(w, rep.n)
    K = stabilizer_algebra(rep, y)
    P, _, _ = parabolic(ws)
    KP = K.intersect(P)
    if KP.dim == 0:
        Khat = leading_term_algebra(K, ws)
        negative = lie_degree_subspace(ws, lambda d: d < 0)
        cert = {
            "dim_K": K.dim,
            "dim_K_cap_P": 0,
            "dim_Pi_minus_K": K.dim - KP.dim,
            "Khat_in_negative": Khat.issubset(negative),
        }
        if not cert["Khat_in_negative"]:
            raise InvariantViolation("K ∩ P = 0 but K-hat has a nonnegative component")
        return CaseA(cert)

    basis = lie_basis(KP)
    rng = random.Random(seed)
    tried = 0
    candidates = iter(basis)
    k = None
    while True:
        cand = next(candidates, None)
        if cand is None:
            if tried - len(basis) >= max_samples:
                return Inconclusive(tried)
            cand = _random_combination(rng, basis)
        tried += 1
        if not cand.is_zero() and is_semisimple(cand):
            k = cand
            break

    u, k_conj = conjugate_into_levi(k, ws)
    _, z = leading_term(grade_vec(rep, ws, y))
    H = stabilizer_algebra(rep, z)
    yu = rep.apply_group(u, y)
    checks = {
        "k_conj_degree_zero": set(grade_lie(ws, k_conj).components) <= {0},
        "u_unipotent_radical": all(
            j > 0 for j in grade_lie(ws, u - RatMatrix.identity(rep.n)).components
        ),
        "k_conj_in_H": H.contains(k_conj.flat()),
        "k_conj_stabilizes_u_y": rep.apply_lie(k_conj, yu).is_zero(),
    }
    if not all(checks.values()):
        raise InvariantViolation("Case B witness failed verification", witness=checks)
    return CaseB(k, u, k_conj, checks)


# ---------------------------------------------------------------------------
# Block triangularization


def block_triangularize(r, s):
    """S = [[I, X], [0, I]] with S r S^{-1} block lower triangular (upper-right s x r' block zero)."""
    n = r.rows
    if not r.is_square() or not 0 < s < n:
        raise InputError("block_triangularize needs a square matrix and 0 < s < size")
    if r.block(0, s, s, n).is_zero():
        return RatMatrix.identity(n)
    p = minimal_polynomial(r)
    if len(poly_gcd(p, poly_deriv(p))) != 1:
        raise NotSemisimple("matrix is not diagonalizable")
    roots = rational_roots(p)
    if len(roots) != len(p) - 1:
        raise IrrationalSpectrum("minimal polynomial has non-rational roots")
    eigvecs = []
    for mu in sorted(roots, reverse=True):
        shifted = r - RatMatrix.identity(n).scale(mu)
        eigvecs.extend(nullspace(shifted.T).vectors())
    chosen = []
    top = Subspace.zero(s)
    for v in eigvecs:
        if len(chosen) == s:
            break
        cand = top.sum(Subspace([v[:s]], s))
        if cand.dim > top.dim:
            chosen.append(v)
            top = cand
    if len(chosen) < s:
        raise DegenerateSelection("no choice of left eigenvectors completes the basis")
    A = RatMatrix([v[:s] for v in chosen])
    B = RatMatrix([v[s:] for v in chosen])
    X = A.inverse() @ B
    rows = [list(RatMatrix.identity(s).row(i)) + list(X.row(i)) for i in range(s)]
    rows += [[ZERO] * s + [ONE if j == i else ZERO for j in range(n - s)] for i in range(n - s)]
    S = RatMatrix(rows)
    conj = S @ r @ S.inverse()
    if not conj.block(0, s, s, n).is_zero():
        raise InvariantViolation("block triangularization failed", witness=conj)
    return S


# ---------------------------------------------------------------------------
# Rectangular partitions and weight correspondence


@dataclass(frozen=True)
class Rectangle:
    rows: tuple
    cols: tuple
    weight: int

    def cells(self):
        return [(i, j) for i in self.rows for j in self.cols]


def _groups(weights):
    groups = {}
    for idx, wt in enumerate(weights, start=1):
        groups.setdefault(wt, []).append(idx)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])


def rectangular_partitions(rowW, colW, extra=None, pad_index=None):
    """Rectangles I_i x J_j of rows/cols with equal weight, 1-based indices.

    When ``extra`` is given, a padding cell (pad_index, pad_index) of that
    weight is appended as its own rectangle.
    """
    rowW, colW = list(rowW), list(colW)
    rects = []
    for I in _groups(rowW):
        for J in _groups(colW):
            rects.append(Rectangle(I, J, rowW[I[0] - 1] + colW[J[0] - 1]))
    if extra is not None:
        p = pad_index if pad_index is not None else max(len(rowW), len(colW)) + 1
        rects.append(Rectangle((p,), (p,), extra))
    return rects


def row_blocks(rects):
    return sorted({r.rows for r in rects}, key=lambda g: g[0])


def col_blocks(rects):
    return sorted({r.cols for r in rects}, key=lambda g: g[0])


def correspondence(partA, partB):
    """Index pairs (i, j) with partA[i].weight == partB[j].weight."""
    return [(i, j) for i, a in enumerate(partA) for j, b in enumerate(partB) if a.weight == b.weight]


# ---------------------------------------------------------------------------
# Boundary recipe


@dataclass
class RecipeResult:
    Q: Form
    d: int
    y: Form
    weights: tuple
    basis: list
    dim_stab_Q: int
    dim_K: int
    verdict: bool
    ell: Optional[RatMatrix] = None


def _coarsening_basis(n, coarsening):
    basis, weights = [], []
    for span, wt in coarsening:
        for item in span:
            if isinstance(item, RatMatrix):
                m = item
            else:
                idx = int(item)
                m = RatMatrix.unit(n, idx // n, idx % n)
            if m.shape != (n, n):
                raise InputError("coarsening matrices must be n x n")
            basis.append(m)
            weights.append(int(wt))
    if len(basis) != n * n or Subspace([m.flat() for m in basis], n * n).dim != n * n:
        raise InputError("coarsening pieces must together form a basis of the n x n matrices")
    return basis, tuple(weights)


def adapted_form(form, n, basis):
    """form(sum_k u_k B_k) as a form in the new coordinates u (row-major entries)."""
    images = [Form.linear([B[a, b] for B in basis]) for a in range(n) for b in range(n)]
    return form.substitute(images)


def boundary_recipe(n, coarsening):
    """Leading term Q of det_n under the weights of a coarsening and its stabilizer test.

    ``coarsening`` is a list of (span, weight), where span lists n x n basis
    matrices (or flattened entry indices) of one piece of the decomposition.
    """
    from .catalog import det_form

    basis, weights = _coarsening_basis(n, coarsening)
    y = adapted_form(det_form(n), n, basis)
    rep = FormsDerivation(n * n, n)
    d, Q = leading_term(grade_vec(rep, weights, y))
    dim_K = stabilizer_algebra(rep, y).dim
    dim_Q = stabilizer_algebra(rep, Q).dim
    return RecipeResult(
        Q=Q,
        d=d,
        y=y,
        weights=weights,
        basis=basis,
        dim_stab_Q=dim_Q,
        dim_K=dim_K,
        verdict=dim_Q == dim_K + 1,
        ell=ell_bar(weights, d, n),
    )
