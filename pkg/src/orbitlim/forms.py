"""Homogeneous forms over Q and the three built-in representations of gl_n.

Conventions used throughout the package:

* The matrix unit E_ij acts on forms as the operator x_i d/dx_j.
* A group element g acts on forms by substitution, (g . f)(x) = f(g^T x).
  Diagonal g therefore scales x_i by g_ii. The substitution rule composes as
  a left action, (g h) . f = g . (h . f), and its derivative is the
  derivation action above.
* Form coordinates (and serialized term lists) follow descending
  lexicographic order on exponent vectors, so x1^2 precedes x1 x2.
"""

from itertools import combinations_with_replacement
from math import comb

from .errors import InputError, ShapeMismatch, Singular, ZeroParameter
from .linalg import ONE, ZERO, RatMatrix, rref, to_rational


class Form:
    """A homogeneous polynomial: exponent tuple -> nonzero Fraction coefficient."""

    __slots__ = ("n_vars", "degree", "_terms", "_hash")

    def __init__(self, n_vars, degree, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != n_vars or any(e < 0 for e in exp):
                raise InputError(f"bad exponent {exp} for {n_vars} variables")
            if sum(exp) != degree:
                raise InputError(f"monomial {exp} is not of degree {degree}")
            c = to_rational(c)
            if c:
                acc[exp] = acc.get(exp, ZERO) + c
        self.n_vars = n_vars
        self.degree = degree
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, n_vars, degree, terms):
        f = object.__new__(cls)
        f.n_vars = n_vars
        f.degree = degree
        f._terms = terms
        f._hash = None
        return f

    @classmethod
    def zero(cls, n_vars, degree):
        return cls._raw(n_vars, degree, {})

    @classmethod
    def constant(cls, n_vars, c):
        c = to_rational(c)
        return cls._raw(n_vars, 0, {(0,) * n_vars: c} if c else {})

    @classmethod
    def variable(cls, n_vars, i):
        exp = [0] * n_vars
        exp[i] = 1
        return cls._raw(n_vars, 1, {tuple(exp): ONE})

    @classmethod
    def monomial(cls, exp, c=1):
        exp = tuple(exp)
        return cls(len(exp), sum(exp), [(exp, c)])

    @classmethod
    def linear(cls, coeffs):
        n = len(coeffs)
        return cls(n, 1, [(tuple(1 if j == i else 0 for j in range(n)), c) for i, c in enumerate(coeffs)])

    # -- inspection --------------------------------------------------------

    def terms(self):
        """(exponent, coefficient) pairs in descending lexicographic order."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, exp):
        return self._terms.get(tuple(exp), ZERO)

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return (
            self.n_vars == other.n_vars
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n_vars, self.degree, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Form({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.terms():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.n_vars != other.n_vars or self.degree != other.degree:
            raise ShapeMismatch("forms of different shape")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Form._raw(self.n_vars, self.degree, out)

    def __neg__(self):
        return Form._raw(self.n_vars, self.degree, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = to_rational(c)
        if not c:
            return Form.zero(self.n_vars, self.degree)
        return Form._raw(self.n_vars, self.degree, {e: c * x for e, x in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Form):
            return self.scale(other)
        if self.n_vars != other.n_vars:
            raise ShapeMismatch("forms in different numbers of variables")
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return Form._raw(
            self.n_vars, self.degree + other.degree, {e: c for e, c in out.items() if c}
        )

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k):
        result = Form.constant(self.n_vars, 1)
        for _ in range(k):
            result = result * self
        return result

    def diff(self, j):
        """Partial derivative in x_j (0-based)."""
        if self.degree == 0:
            raise InputError("derivative of a constant form")
        out = {}
        for e, c in self._terms.items():
            if e[j]:
                ne = list(e)
                ne[j] -= 1
                out[tuple(ne)] = c * e[j]
        return Form._raw(self.n_vars, self.degree - 1, out)

    def evaluate(self, point):
        point = [to_rational(p) for p in point]
        if len(point) != self.n_vars:
            raise ShapeMismatch("point has the wrong number of coordinates")
        total = ZERO
        for e, c in self._terms.items():
            term = c
            for p, k in zip(point, e):
                if k:
                    term *= p**k
            total += term
        return total

    def substitute(self, images):
        """Replace x_i by the form images[i]; all images share one degree and arity."""
        if len(images) != self.n_vars:
            raise ShapeMismatch("one image per variable is required")
        if not images:
            return self
        m, d = images[0].n_vars, images[0].degree
        if any(im.n_vars != m or im.degree != d for im in images):
            raise ShapeMismatch("substitution images must share a shape")
        cache = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = Form.constant(m, 1) if k == 0 else power(i, k - 1) * images[i]
            return cache[key]

        out = {}
        for e, c in self._terms.items():
            prod = Form.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    prod = prod * power(i, k)
            for pe, pc in prod._terms.items():
                out[pe] = out.get(pe, ZERO) + pc
        return Form._raw(m, self.degree * d, {e: c for e, c in out.items() if c})

    def restrict(self, exps):
        keep = set(exps)
        return Form._raw(
            self.n_vars, self.degree, {e: c for e, c in self._terms.items() if e in keep}
        )


def monomial_basis(n_vars, degree):
    """Exponent vectors of the given degree in descending lexicographic order."""
    out = []
    for combo in combinations_with_replacement(range(n_vars), degree):
        exp = [0] * n_vars
        for i in combo:
            exp[i] += 1
        out.append(tuple(exp))
    out.sort(reverse=True)
    return out


def exponentiate_onps(w, t):
    """diag(t^{w_1}, ..., t^{w_n}) for a nonzero rational t."""
    t = to_rational(t)
    if not t:
        raise ZeroParameter("the 1-PS parameter must be nonzero")
    return RatMatrix.diag([t**wi for wi in w])


# ---------------------------------------------------------------------------
# Representations


class Representation:
    """A rational representation of gl_n on V with an explicit coordinate basis."""

    kind = None
    n = 0
    ambient_dim = 0

    def _check_lie(self, g):
        if not isinstance(g, RatMatrix) or g.shape != (self.n, self.n):
            raise ShapeMismatch(f"expected a {self.n}x{self.n} matrix")

    def action_matrix(self, v):
        """The ambient_dim x n^2 matrix of the map x -> x . v (column a*n+b is E_ab . v)."""
        self.validate(v)
        n = self.n
        cols = []
        for a in range(n):
            for b in range(n):
                cols.append(self._unit_coords(a, b, v))
        return RatMatrix.from_columns(cols, rows=self.ambient_dim)

    def _unit_coords(self, a, b, v):
        return self.coords(self._lie(RatMatrix.unit(self.n, a, b), v))

    def apply_lie(self, g, v):
        self._check_lie(g)
        self.validate(v)
        return self._lie(g, v)

    def apply_group(self, g, v):
        self._check_lie(g)
        self.validate(v)
        if rref(g)[2] < self.n:
            raise Singular("group element is not invertible")
        return self._group(g, v)

    def coord_degrees(self, w):
        """Integer lambda-weight of every coordinate of V under weights w."""
        return [sum(c * wi for c, wi in zip(chi, w)) for chi in self.coord_characters()]

    def to_json(self):
        raise NotImplementedError


class FormsDerivation(Representation):
    """gl_n acting on degree-k forms in n variables; V = Sym^k of the dual."""

    kind = "forms"

    def __init__(self, n_vars, degree):
        if n_vars < 1 or degree < 0:
            raise InputError("forms need n_vars >= 1 and degree >= 0")
        self.n = n_vars
        self.n_vars = n_vars
        self.degree = degree
        self.ambient_dim = comb(n_vars + degree - 1, degree)
        self._basis = monomial_basis(n_vars, degree)
        self._index = {e: i for i, e in enumerate(self._basis)}

    def __eq__(self, other):
        return isinstance(other, FormsDerivation) and (self.n, self.degree) == (other.n, other.degree)

    def __hash__(self):
        return hash(("forms", self.n, self.degree))

    def __repr__(self):
        return f"FormsDerivation(n_vars={self.n}, degree={self.degree})"

    def to_json(self):
        return {"kind": "forms", "n_vars": self.n, "degree": self.degree}

    @property
    def monomials(self):
        return list(self._basis)

    def validate(self, v):
        if not isinstance(v, Form) or v.n_vars != self.n or v.degree != self.degree:
            raise ShapeMismatch(f"expected a degree-{self.degree} form in {self.n} variables")

    def zero(self):
        return Form.zero(self.n, self.degree)

    def coords(self, v):
        out = [ZERO] * self.ambient_dim
        for e, c in v._terms.items():
            out[self._index[e]] = c
        return tuple(out)

    def from_coords(self, c):
        if len(c) != self.ambient_dim:
            raise ShapeMismatch("coordinate vector has the wrong length")
        return Form._raw(
            self.n, self.degree, {self._basis[i]: to_rational(x) for i, x in enumerate(c) if x}
        )

    def coord_characters(self):
        return list(self._basis)

    def central_character(self):
        return self.degree

    def _lie(self, g, f):
        n = self.n
        out = {}
        nz = [(i, j, g[i, j]) for i in range(n) for j in range(n) if g[i, j]]
        for e, c in f._terms.items():
            for i, j, gij in nz:
                if e[j]:
                    ne = list(e)
                    ne[j] -= 1
                    ne[i] += 1
                    ne = tuple(ne)
                    out[ne] = out.get(ne, ZERO) + gij * c * e[j]
        return Form._raw(n, self.degree, {e: c for e, c in out.items() if c})

    def _unit_coords(self, a, b, f):
        out = [ZERO] * self.ambient_dim
        idx = self._index
        for e, c in f._terms.items():
            if e[b]:
                ne = list(e)
                ne[b] -= 1
                ne[a] += 1
                out[idx[tuple(ne)]] += c * e[b]
        return tuple(out)

    def _group(self, g, f):
        # x_i -> (g^T x)_i = sum_k g_ki x_k
        n = self.n
        images = [Form.linear([g[k, i] for k in range(n)]) for i in range(n)]
        if self.degree == 0:
            return f
        return f.substitute(images)


class _MatrixRep(Representation):
    def validate(self, v):
        if not isinstance(v, RatMatrix) or v.shape != self.vec_shape:
            raise ShapeMismatch(f"expected a {self.vec_shape[0]}x{self.vec_shape[1]} matrix")

    def zero(self):
        return RatMatrix.zeros(*self.vec_shape)

    def coords(self, v):
        return v.flat()

    def from_coords(self, c):
        return RatMatrix.from_flat(self.vec_shape[0], self.vec_shape[1], c)


class LeftMult(_MatrixRep):
    """gl_rows acting on rows x cols matrices by left multiplication."""

    kind = "leftmult"

    def __init__(self, rows, cols):
        if rows < 1 or cols < 1:
            raise InputError("LeftMult needs positive dimensions")
        self.n = rows
        self.rows = rows
        self.cols = cols
        self.vec_shape = (rows, cols)
        self.ambient_dim = rows * cols

    def __eq__(self, other):
        return isinstance(other, LeftMult) and self.vec_shape == other.vec_shape

    def __hash__(self):
        return hash(("leftmult", self.vec_shape))

    def __repr__(self):
        return f"LeftMult(rows={self.rows}, cols={self.cols})"

    def to_json(self):
        return {"kind": "leftmult", "rows": self.rows, "cols": self.cols}

    def coord_characters(self):
        n = self.n
        return [tuple(1 if k == i else 0 for k in range(n)) for i in range(n) for _ in range(self.cols)]

    def central_character(self):
        return 1

    def _lie(self, g, v):
        return g @ v

    def _group(self, g, v):
        return g @ v


class Conjugation(_MatrixRep):
    """gl_n acting on n x n matrices by the adjoint action."""

    kind = "conjugation"

    def __init__(self, n):
        if n < 1:
            raise InputError("Conjugation needs n >= 1")
        self.n = n
        self.vec_shape = (n, n)
        self.ambient_dim = n * n

    def __eq__(self, other):
        return isinstance(other, Conjugation) and self.n == other.n

    def __hash__(self):
        return hash(("conjugation", self.n))

    def __repr__(self):
        return f"Conjugation(n={self.n})"

    def to_json(self):
        return {"kind": "conjugation", "n": self.n}

    def coord_characters(self):
        n = self.n
        out = []
        for a in range(n):
            for b in range(n):
                chi = [0] * n
                chi[a] += 1
                chi[b] -= 1
                out.append(tuple(chi))
        return out

    def central_character(self):
        return 0

    def _lie(self, g, v):
        return g @ v - v @ g

    def _group(self, g, v):
        return g @ v @ g.inverse()


def apply_lie(rep, g, v):
    return rep.apply_lie(g, v)


def apply_group(rep, g, v):
    return rep.apply_group(g, v)


def vec_is_zero(v):
    return v.is_zero()


def rep_from_json(d):
    try:
        kind = d["kind"]
        if kind == "forms":
            return FormsDerivation(int(d["n_vars"]), int(d["degree"]))
        if kind == "leftmult":
            return LeftMult(int(d["rows"]), int(d["cols"]))
        if kind == "conjugation":
            return Conjugation(int(d["n"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad representation spec: {d!r}") from exc
    raise InputError(f"unknown representation kind {d.get('kind')!r}")


__all__ = [
    "Form",
    "FormsDerivation",
    "LeftMult",
    "Conjugation",
    "Representation",
    "apply_lie",
    "apply_group",
    "exponentiate_onps",
    "monomial_basis",
    "rep_from_json",
]
