"""Stabilizer algebras, orbit tangents, normal-slice stabilizers and K-hat."""

from dataclasses import dataclass, field
from math import isqrt
from typing import Optional

from .errors import InvariantViolation, ZeroVector
from .grading import as_weights, grade_vec, leading_term, lie_degrees, tangent_of_approach
from .linalg import ZERO, RatMatrix, Subspace, commutator, nullspace


def _nonzero(rep, v):
    rep.validate(v)
    if v.is_zero():
        raise ZeroVector("stabilizer of the zero vector requested")


def stabilizer_algebra(rep, v):
    """{g in gl_n : g . v = 0}, in the flattened E_ab coordinates."""
    _nonzero(rep, v)
    return nullspace(rep.action_matrix(v))


def orbit_tangent(rep, v):
    """gl_n . v as a subspace of V."""
    _nonzero(rep, v)
    m = rep.action_matrix(v)
    return Subspace(m.T.to_rows(), rep.ambient_dim)


def lie_basis(sub):
    n = isqrt(sub.ambient_dim)
    return sub.basis_matrices(n)


def normal_slice_stabilizer(rep, z, y_e, H=None, tangent=None):
    """{h in gl_z : h . y_e in T_z O(z)}; all of gl_z when y_e is None."""
    _nonzero(rep, z)
    H = stabilizer_algebra(rep, z) if H is None else H
    if y_e is None or H.dim == 0:
        return H
    T = orbit_tangent(rep, z) if tangent is None else tangent
    hs = lie_basis(H)
    residues = [T.reduce_mod(rep.coords(rep.apply_lie(h, y_e))) for h in hs]
    ker = nullspace(RatMatrix.from_columns(residues, rows=rep.ambient_dim))
    vecs = H.vectors()
    combos = []
    for c in ker.vectors():
        combos.append([sum(ci * v[k] for ci, v in zip(c, vecs) if ci) for k in range(H.ambient_dim)])
    return Subspace(combos, H.ambient_dim)


def leading_components(vec, degrees):
    """(lowest degree, vector restricted to that degree) for a nonzero vector."""
    d = min(degrees[i] for i, x in enumerate(vec) if x)
    return d, tuple(x if degrees[i] == d else ZERO for i, x in enumerate(vec))


def filtration_step(M, degrees, i):
    """M_i = M ∩ (sum of coordinates of degree >= i)."""
    below = [k for k, d in enumerate(degrees) if d < i]
    vecs = M.vectors()
    if not below or not vecs:
        return M
    proj = RatMatrix([[v[k] for v in vecs] for k in below])
    ker = nullspace(proj)
    return Subspace(
        [[sum(c * v[k] for c, v in zip(cs, vecs) if c) for k in range(M.ambient_dim)] for cs in ker.vectors()],
        M.ambient_dim,
    )


def leading_subspace(M, degrees):
    """Span of leading terms of M for the coordinate grading ``degrees``.

    Walks the filtration M = M_{i_0} ⊇ M_{i_1} ⊇ ... over the occurring
    degrees, takes the canonical complement B_j of M_{i_{j+1}} in M_{i_j},
    and collects the degree-i_j components of B_j.
    """
    thresholds = sorted(set(degrees))
    levels = [filtration_step(M, degrees, i) for i in thresholds]
    levels.append(Subspace.zero(M.ambient_dim))
    out = []
    for j, i in enumerate(thresholds):
        comp = levels[j + 1].complement_in(levels[j])
        for b in comp.vectors():
            out.append([x if degrees[k] == i else ZERO for k, x in enumerate(b)])
    hat = Subspace(out, M.ambient_dim)
    if hat.dim != M.dim:
        raise InvariantViolation("leading-term space lost dimension", witness=(M.dim, hat.dim))
    return hat


def leading_term_algebra(L, w):
    n = isqrt(L.ambient_dim)
    ws = as_weights(w, n)
    return leading_subspace(L, lie_degrees(ws))


def bracket_closed(L):
    """(True, None) if [b_i, b_j] in L for all basis pairs, else (False, (i, j, bracket))."""
    mats = lie_basis(L)
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            br = commutator(mats[i], mats[j])
            if not L.contains(br.flat()):
                return False, (i, j, br)
    return True, None


@dataclass
class StabReport:
    d: int
    z: object
    e: Optional[int]
    y_e: object
    K: Subspace
    H: Subspace
    Hye: Subspace
    Khat: Subspace
    tangent: Subspace
    checks: dict = field(default_factory=dict)

    @property
    def dims(self):
        return {
            "K": self.K.dim,
            "H": self.H.dim,
            "Hye": self.Hye.dim,
            "Khat": self.Khat.dim,
            "tangent": self.tangent.dim,
        }


def full_report(rep, y, w):
    """Compute z, y_e, K, H, K-hat, H_ye and T_z O(z), then verify the containment chain."""
    _nonzero(rep, y)
    gv = grade_vec(rep, w, y)
    d, z = leading_term(gv)
    tan = tangent_of_approach(gv)
    e, y_e = tan if tan is not None else (None, None)
    K = stabilizer_algebra(rep, y)
    H = stabilizer_algebra(rep, z)
    T = orbit_tangent(rep, z)
    Khat = leading_term_algebra(K, w)
    Hye = normal_slice_stabilizer(rep, z, y_e, H=H, tangent=T)
    closed, witness = bracket_closed(Khat)
    checks = {
        "Khat_in_Hye": Khat.issubset(Hye),
        "Hye_in_H": Hye.issubset(H),
        "dim_Khat_eq_dim_K": Khat.dim == K.dim,
        "Khat_bracket_closed": closed,
    }
    report = StabReport(d, z, e, y_e, K, H, Hye, Khat, T, checks)
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise InvariantViolation(f"stabilizer chain failed: {', '.join(failed)}", witness=witness)
    return report
