"""d-stabilizers, the P + K + F decomposition and co-limit tangent spaces."""

from dataclasses import dataclass
from typing import Optional

from .errors import InvariantViolation, KNotContained, ZeroVector
from .grading import as_weights, grade_vec, leading_term, lie_degree_subspace, parabolic
from .linalg import RatMatrix, Subspace, nullspace
from .stabilizers import lie_basis, stabilizer_algebra


def d_stabilizers(rep, y, w, d):
    """{g : (g . y)_a = 0 for every a < d}."""
    rep.validate(y)
    if y.is_zero():
        raise ZeroVector("d-stabilizers of the zero vector requested")
    ws = as_weights(w, rep.n)
    degs = rep.coord_degrees(ws)
    A = rep.action_matrix(y)
    rows = [A.row(i) for i in range(rep.ambient_dim) if degs[i] < d]
    if not rows:
        return Subspace.full(rep.n * rep.n)
    return nullspace(RatMatrix(rows, cols=rep.n * rep.n))


def decompose_PKF(Gyd, P, K, bound=None):
    """Canonical complement F of (P + K) ∩ Gyd inside Gyd.

    ``bound`` is an optional upper limit on dim F, such as dim H - dim K-hat.
    """
    if not K.issubset(Gyd):
        raise KNotContained("the stabilizer is not contained in the d-stabilizers")
    F = P.sum(K).intersect(Gyd).complement_in(Gyd)
    if bound is not None and F.dim > bound:
        raise InvariantViolation(f"dim F = {F.dim} exceeds the bound {bound}")
    return F


def colimit_tangent(rep, y, w, d, F):
    """(TW, G0z, codim) inside V_d, with codim = dim(TW + G0z) - dim(G0z)."""
    ws = as_weights(w, rep.n)
    degs = rep.coord_degrees(ws)
    keep = [i for i, x in enumerate(degs) if x == d]

    def pi_d(v):
        cs = rep.coords(v)
        return [cs[i] if i in keep else 0 for i in range(rep.ambient_dim)]

    TW = Subspace([pi_d(rep.apply_lie(f, y)) for f in lie_basis(F)], rep.ambient_dim)
    z = grade_vec(rep, ws, y)[d]
    L0 = lie_degree_subspace(ws, lambda j: j == 0)
    G0z = Subspace([rep.coords(rep.apply_lie(g, z)) for g in lie_basis(L0)], rep.ambient_dim)
    return TW, G0z, TW.sum(G0z).dim - G0z.dim


@dataclass
class ColimitReport:
    d: int
    Gyd: Subspace
    F: Subspace
    TW: Subspace
    G0z: Subspace
    codim: int
    bound: Optional[int] = None

    @property
    def dims(self):
        return {"Gyd": self.Gyd.dim, "F": self.F.dim, "TW": self.TW.dim, "G0z": self.G0z.dim, "codim": self.codim}


def colimit_report(rep, y, w, d=None, bound=None):
    ws = as_weights(w, rep.n)
    if d is None:
        d, _ = leading_term(grade_vec(rep, ws, y))
    Gyd = d_stabilizers(rep, y, ws, d)
    K = stabilizer_algebra(rep, y)
    P, _, _ = parabolic(ws)
    lead, _ = leading_term(grade_vec(rep, ws, y))
    if d == lead and not P.issubset(Gyd):
        raise InvariantViolation("the parabolic is not contained in the d-stabilizers")
    F = decompose_PKF(Gyd, P, K, bound)
    TW, G0z, codim = colimit_tangent(rep, y, ws, d, F)
    return ColimitReport(d, Gyd, F, TW, G0z, codim, bound)


def strictness_verdict(report):
    """Tangent-level evidence only: codim > 0 assumes smoothness of Y_d and Z_d."""
    return {"strict_tangent_excess": report.codim > 0}
