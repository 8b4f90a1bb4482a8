"""Gradings of V and gl_n induced by a diagonal one-parameter subgroup.

lambda(t) = diag(t^{w_1}, ..., t^{w_n}). A form monomial x^alpha has degree
<alpha, w>; a LeftMult entry (a, b) has degree w_a; a Conjugation entry and
a Lie algebra entry (a, b) have degree w_a - w_b.
"""

from fractions import Fraction

from .errors import InputError, ShapeMismatch, ZeroCharacter, ZeroVector
from .linalg import ZERO, RatMatrix, Subspace


class OnePS:
    __slots__ = ("weights",)

    def __init__(self, weights):
        raw = list(weights)
        try:
            ok = all(not isinstance(x, bool) and int(x) == x for x in raw)
        except (TypeError, ValueError):
            ok = False
        if not ok:
            raise InputError(f"1-PS weights must be integers: {raw!r}")
        self.weights = tuple(int(x) for x in raw)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __eq__(self, other):
        if isinstance(other, OnePS):
            return self.weights == other.weights
        return NotImplemented

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"OnePS({list(self.weights)})"

    def negated(self):
        return OnePS(-x for x in self.weights)

    def to_json(self):
        return list(self.weights)


def as_weights(w, n=None):
    ws = w.weights if isinstance(w, OnePS) else OnePS(w).weights
    if n is not None and len(ws) != n:
        raise ShapeMismatch(f"1-PS has {len(ws)} weights, representation needs {n}")
    return ws


class GradedVec:
    """The decomposition v = sum_i v_i with lambda(t) v = sum_i t^i v_i."""

    __slots__ = ("rep", "components")

    def __init__(self, rep, components):
        self.rep = rep
        self.components = dict(sorted(components.items()))

    def degrees(self):
        return list(self.components)

    def __getitem__(self, i):
        return self.components.get(i, self.rep.zero())

    def __len__(self):
        return len(self.components)

    def reconstruct(self):
        total = self.rep.zero()
        for v in self.components.values():
            total = total + v
        return total


def grade_vec(rep, w, v):
    ws = as_weights(w, rep.n)
    rep.validate(v)
    degs = rep.coord_degrees(ws)
    buckets = {}
    for i, c in enumerate(rep.coords(v)):
        if c:
            buckets.setdefault(degs[i], [ZERO] * rep.ambient_dim)[i] = c
    return GradedVec(rep, {d: rep.from_coords(cs) for d, cs in buckets.items()})


def leading_term(gv):
    if not gv.components:
        raise ZeroVector("the zero vector has no leading term")
    d = min(gv.components)
    return d, gv.components[d]


def tangent_of_approach(gv):
    if not gv.components:
        raise ZeroVector("the zero vector has no leading term")
    degs = sorted(gv.components)
    if len(degs) < 2:
        return None
    return degs[1], gv.components[degs[1]]


def project_degree(rep, w, v, d):
    """pi_d: the degree-d component of v (zero if absent)."""
    return grade_vec(rep, w, v)[d]


# ---------------------------------------------------------------------------
# Lie side


def lie_degrees(w):
    """Degree w_a - w_b of each flattened gl_n coordinate a*n + b."""
    ws = as_weights(w)
    return [wa - wb for wa in ws for wb in ws]


class GradedLie:
    __slots__ = ("components",)

    def __init__(self, components):
        self.components = dict(sorted(components.items()))

    def __getitem__(self, j):
        return self.components[j]

    def degrees(self):
        return list(self.components)


def grade_lie(w, g):
    ws = as_weights(w, g.rows)
    if not g.is_square():
        raise ShapeMismatch("Lie algebra elements are square")
    n = g.rows
    buckets = {}
    for a in range(n):
        for b in range(n):
            if g[a, b]:
                buckets.setdefault(ws[a] - ws[b], [[ZERO] * n for _ in range(n)])[a][b] = g[a, b]
    return GradedLie({j: RatMatrix(m) for j, m in buckets.items()})


def lie_leading(g, w):
    comps = grade_lie(w, g).components
    if not comps:
        raise ZeroVector("the zero matrix has no leading term")
    b = min(comps)
    return b, comps[b]


def lie_degree_subspace(w, pred):
    degs = lie_degrees(w)
    n = len(as_weights(w))
    return Subspace.coordinate(n * n, [i for i, d in enumerate(degs) if pred(d)])


def parabolic(w):
    """(P, L, U): nonnegative, zero and positive Ad-degrees of gl_n."""
    return (
        lie_degree_subspace(w, lambda d: d >= 0),
        lie_degree_subspace(w, lambda d: d == 0),
        lie_degree_subspace(w, lambda d: d > 0),
    )


def ell_bar(w, d, c):
    """diag(w) - (d/c) I, which acts on V_i by i - d when the identity acts by c."""
    if not c:
        raise ZeroCharacter("the identity acts trivially; the shift d/c is undefined")
    ws = as_weights(w)
    shift = Fraction(d, c)
    return RatMatrix.diag([wi - shift for wi in ws])


def ell_bar_for(rep, w, d):
    return ell_bar(w, d, rep.central_character())
