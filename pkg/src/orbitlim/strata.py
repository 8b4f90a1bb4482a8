"""Character supports, torus stabilizers, faces and the intermediate-face construction."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InvariantViolation, NoRoom, NotInPositiveCone, ZeroVector
from .grading import grade_vec, leading_term
from .linalg import RatMatrix, Subspace, nullspace, rref, to_rational


class CharacterSet:
    """Distinct integer characters, kept in descending lexicographic order."""

    __slots__ = ("chars", "r")

    def __init__(self, chars, r=None):
        cs = sorted({tuple(int(c) for c in chi) for chi in chars}, reverse=True)
        self.chars = tuple(cs)
        self.r = r if r is not None else (len(cs[0]) if cs else 0)

    def __iter__(self):
        return iter(self.chars)

    def __len__(self):
        return len(self.chars)

    def __contains__(self, chi):
        return tuple(chi) in set(self.chars)

    def __eq__(self, other):
        return isinstance(other, CharacterSet) and self.chars == other.chars

    def __hash__(self):
        return hash(self.chars)

    def __repr__(self):
        return f"CharacterSet({[list(c) for c in self.chars]})"

    def union(self, other):
        return CharacterSet(self.chars + other.chars, self.r)

    def matrix(self):
        return RatMatrix(self.chars, cols=self.r)


def support(rep, v):
    rep.validate(v)
    if v.is_zero():
        raise ZeroVector("support of the zero vector")
    chars = rep.coord_characters()
    return CharacterSet([chars[i] for i, c in enumerate(rep.coords(v)) if c], rep.n)


def support_dim(cs):
    if not len(cs):
        return 0
    return rref(cs.matrix())[2]


def torus_stabilizer(cs):
    if not len(cs):
        return Subspace.full(cs.r)
    return nullspace(cs.matrix())


def pairing(chi, t):
    return sum((to_rational(c) * to_rational(x) for c, x in zip(chi, t)), Fraction(0))


@dataclass
class Face:
    defining: tuple
    members: CharacterSet
    parent: CharacterSet


def face_of(y_cs, t):
    t = tuple(to_rational(x) for x in t)
    members = []
    for chi in y_cs:
        p = pairing(chi, t)
        if p < 0:
            raise NotInPositiveCone(f"<{list(chi)}, t> = {p} < 0", character=chi)
        if p == 0:
            members.append(chi)
    return Face(t, CharacterSet(members, y_cs.r), y_cs)


def _integral(t):
    den = lcm(*(Fraction(x).denominator for x in t)) if t else 1
    return [int(Fraction(x) * den) for x in t]


def face_restrict(rep, v, face):
    """y_F, the sum of the components of v whose character lies in the face."""
    chars = rep.coord_characters()
    keep = set(face.members.chars)
    coords = [c if chars[i] in keep else 0 for i, c in enumerate(rep.coords(v))]
    yF = rep.from_coords(coords)
    # y_F is the leading term of v under the (integral rescaling of the) 1-PS t^face.defining
    d, lead = leading_term(grade_vec(rep, _integral(face.defining), v))
    if d != 0 or lead != yF:
        raise InvariantViolation("face restriction disagrees with the leading term", witness=face.defining)
    return yF


def is_facet(face):
    return support_dim(face.members) == support_dim(face.parent) - 1


@dataclass
class IntermediateFace:
    t_prime: tuple
    face: Face
    s: tuple
    epsilon: Fraction
    dims: tuple


def intermediate_face(y_cs, z_face, ell):
    """Face strictly between F_z and Xi(y), from the construction along ell + eps s."""
    ell = tuple(to_rational(x) for x in ell)
    expected = face_of(y_cs, ell)
    if expected.members != z_face.members:
        raise InvariantViolation("z_face is not the face cut out by ell")
    dim_y = support_dim(y_cs)
    dim_z = support_dim(z_face.members)
    if dim_y - dim_z < 2:
        raise NoRoom(f"support dimensions {dim_y} and {dim_z} leave no room for a face between")
    Ty = torus_stabilizer(y_cs)
    base = Ty.sum(Subspace([ell], y_cs.r))
    s = next((v for v in torus_stabilizer(z_face.members).vectors() if not base.contains(v)), None)
    if s is None:
        raise InvariantViolation("no torus direction independent of T_y + Q ell")
    # fix the sign of s by its first nonzero entry, before the orientation rule below
    if next(x for x in s if x) < 0:
        s = tuple(-x for x in s)
    rest = [chi for chi in y_cs if chi not in z_face.members]
    b = [pairing(chi, s) for chi in rest]
    if all(x >= 0 for x in b):
        s = tuple(-x for x in s)
        b = [-x for x in b]
    a = [pairing(chi, ell) for chi in rest]
    eps = min(ai / -bi for ai, bi in zip(a, b) if bi < 0)
    t_prime = tuple(l + eps * si for l, si in zip(ell, s))
    F = face_of(y_cs, t_prime)
    dim_F = support_dim(F.members)
    ok = (
        dim_y > dim_F > dim_z
        and set(z_face.members.chars) < set(F.members.chars)
        and any(pairing(chi, t_prime) > 0 for chi in y_cs)
    )
    if not ok:
        raise InvariantViolation("intermediate face failed the dimension sandwich", witness=t_prime)
    return IntermediateFace(t_prime, F, tuple(s), eps, (dim_y, dim_F, dim_z))


def nsquare_report(y_cs, q_cs, ell):
    ell = tuple(to_rational(x) for x in ell)
    return {
        "dimY": support_dim(y_cs),
        "dimQ": support_dim(q_cs),
        "pairings_nonneg": all(pairing(chi, ell) >= 0 for chi in y_cs),
        "pairings_zero_on_Q": all(pairing(chi, ell) == 0 for chi in q_cs),
    }
