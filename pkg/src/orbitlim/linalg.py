"""Exact linear algebra over the rationals.

Scalars are ``fractions.Fraction``; matrices are immutable dense grids; a
``Subspace`` always stores its basis in reduced row-echelon form, so two
subspaces are equal exactly when their stored bases are equal.
"""

from fractions import Fraction
from math import factorial

from .errors import AmbientMismatch, InputError, NoSolution, NotContained, Singular


def to_rational(x):
    """Parse an int, Fraction or "p/q" string into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {x!r}") from exc
    raise InputError(f"not a rational: {x!r}")


def rational_str(q):
    return str(Fraction(q))


ZERO = Fraction(0)
ONE = Fraction(1)


class RatMatrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data, cols=None):
        rows_ = tuple(tuple(to_rational(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows_[0]) if rows_ else 0
        for r in rows_:
            if len(r) != cols:
                raise InputError("ragged matrix rows")
        self.rows = len(rows_)
        self.cols = cols
        self._data = rows_
        self._hash = None

    @classmethod
    def _raw(cls, data, rows, cols):
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = data
        m._hash = None
        return m

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls._raw(tuple((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n):
        return cls._raw(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n, n
        )

    @classmethod
    def diag(cls, entries):
        entries = [to_rational(e) for e in entries]
        n = len(entries)
        return cls._raw(
            tuple(tuple(entries[i] if i == j else ZERO for j in range(n)) for i in range(n)),
            n,
            n,
        )

    @classmethod
    def unit(cls, n, a, b, cols=None):
        """The matrix unit E_ab (0-based indices)."""
        cols = n if cols is None else cols
        return cls._raw(
            tuple(
                tuple(ONE if (i == a and j == b) else ZERO for j in range(cols))
                for i in range(n)
            ),
            n,
            cols,
        )

    @classmethod
    def from_flat(cls, rows, cols, values):
        values = [to_rational(v) for v in values]
        if len(values) != rows * cols:
            raise InputError("flat entry count does not match shape")
        return cls._raw(
            tuple(tuple(values[i * cols : (i + 1) * cols]) for i in range(rows)), rows, cols
        )

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [tuple(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls._raw(
            tuple(tuple(c[i] for c in columns) for i in range(rows)), rows, len(columns)
        )

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def col(self, j):
        return tuple(r[j] for r in self._data)

    def tolist(self):
        return [list(r) for r in self._data]

    def to_rows(self):
        return self._data

    def flat(self):
        return tuple(x for r in self._data for x in r)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return not any(x for r in self._data for x in r)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"RatMatrix([{body}])"

    def _check_same(self, other):
        if self.shape != other.shape:
            raise InputError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        return RatMatrix._raw(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.rows,
            self.cols,
        )

    def __sub__(self, other):
        self._check_same(other)
        return RatMatrix._raw(
            tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.rows,
            self.cols,
        )

    def __neg__(self):
        return RatMatrix._raw(tuple(tuple(-x for x in r) for r in self._data), self.rows, self.cols)

    def scale(self, c):
        c = to_rational(c)
        return RatMatrix._raw(
            tuple(tuple(c * x for x in r) for r in self._data), self.rows, self.cols
        )

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.col
        cols_ = [ocols(j) for j in range(other.cols)]
        out = []
        for r in self._data:
            nz = [(k, x) for k, x in enumerate(r) if x]
            out.append(tuple(sum((x * c[k] for k, x in nz), ZERO) for c in cols_))
        return RatMatrix._raw(tuple(out), self.rows, other.cols)

    def apply(self, v):
        """Matrix times column vector (a sequence), returned as a tuple."""
        if len(v) != self.cols:
            raise InputError("vector length does not match matrix")
        nz = [(k, x) for k, x in enumerate(v) if x]
        return tuple(sum((r[k] * x for k, x in nz), ZERO) for r in self._data)

    @property
    def T(self):
        return RatMatrix._raw(
            tuple(tuple(self._data[i][j] for i in range(self.rows)) for j in range(self.cols)),
            self.cols,
            self.rows,
        )

    def trace(self):
        return sum((self._data[i][i] for i in range(min(self.rows, self.cols))), ZERO)

    def __pow__(self, k):
        if not self.is_square() or k < 0:
            raise InputError("matrix power needs a square matrix and k >= 0")
        result = RatMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def rank(self):
        return rref(self)[2]

    def det(self):
        if not self.is_square():
            raise InputError("determinant of a non-square matrix")
        m = [list(r) for r in self._data]
        n = self.rows
        sign = ONE
        det = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c]), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                sign = -sign
            piv = m[c][c]
            det *= piv
            for i in range(c + 1, n):
                f = m[i][c]
                if f:
                    f /= piv
                    ri, rc = m[i], m[c]
                    for j in range(c, n):
                        if rc[j]:
                            ri[j] -= f * rc[j]
        return sign * det

    def inverse(self):
        if not self.is_square():
            raise Singular("non-square matrix has no inverse")
        n = self.rows
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self._data)]
        rows, pivots = _rref_rows(aug, limit=n)
        if len(pivots) < n:
            raise Singular("matrix is singular")
        return RatMatrix._raw(tuple(tuple(r[n:]) for r in rows), n, n)

    def block(self, r0, r1, c0, c1):
        return RatMatrix._raw(
            tuple(tuple(r[c0:c1]) for r in self._data[r0:r1]), r1 - r0, c1 - c0
        )


def commutator(a, b):
    return a @ b - b @ a


def exp_nilpotent(x):
    """exp(x) for nilpotent x, as the finite exponential series."""
    n = x.rows
    result = RatMatrix.identity(n)
    term = RatMatrix.identity(n)
    for k in range(1, n + 1):
        term = term @ x
        if term.is_zero():
            return result
        result = result + term.scale(Fraction(1, factorial(k)))
    if not (term @ x).is_zero():
        raise InputError("exp_nilpotent called on a non-nilpotent matrix")
    return result


# ---------------------------------------------------------------------------
# Row reduction


def _rref_rows(rows, limit=None):
    """In-place Gauss-Jordan on a list of mutable rows.

    Only columns below ``limit`` are used as pivots. Returns the nonzero
    reduced rows (in pivot order) and the pivot columns.
    """
    if not rows:
        return [], []
    ncols = len(rows[0])
    limit = ncols if limit is None else limit
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(limit):
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow = [x * inv if x else ZERO for x in prow]
            rows[r] = prow
        nzcols = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for j in nzcols:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def rref(m):
    """Return (reduced, pivots, rank) for a RatMatrix."""
    rows = [list(r) for r in m.to_rows()]
    reduced, pivots = _rref_rows(rows)
    rank = len(pivots)
    full = [tuple(r) for r in reduced] + [(ZERO,) * m.cols for _ in range(m.rows - rank)]
    return RatMatrix._raw(tuple(full), m.rows, m.cols), pivots, rank


def _nullspace_rows(rows, ncols):
    reduced, pivots = _rref_rows([list(r) for r in rows])
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(reduced, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def nullspace(m):
    """The subspace {v : m v = 0} of Q^cols."""
    return Subspace(_nullspace_rows(m.to_rows(), m.cols), m.cols)


def solve_linear(m, rhs):
    """Particular solution of m x = rhs with free variables set to 0, else None."""
    if len(rhs) != m.rows:
        raise InputError("right-hand side length does not match rows")
    aug = [list(r) + [to_rational(b)] for r, b in zip(m.to_rows(), rhs)]
    reduced, pivots = _rref_rows(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for row, p in zip(reduced, pivots):
        x[p] = row[-1]
    return tuple(x)


# ---------------------------------------------------------------------------
# Subspaces


class Subspace:
    """A linear subspace of Q^ambient_dim with a canonical RREF basis."""

    __slots__ = ("ambient_dim", "_rows", "pivots", "_hash")

    def __init__(self, vectors, ambient_dim):
        rows = []
        for v in vectors:
            v = [to_rational(x) for x in v]
            if len(v) != ambient_dim:
                raise AmbientMismatch(
                    f"vector of length {len(v)} in ambient dimension {ambient_dim}"
                )
            rows.append(v)
        reduced, pivots = _rref_rows(rows)
        self.ambient_dim = ambient_dim
        self._rows = tuple(tuple(r) for r in reduced)
        self.pivots = tuple(pivots)
        self._hash = None

    @classmethod
    def zero(cls, n):
        return cls([], n)

    @classmethod
    def full(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def coordinate(cls, n, indices):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in sorted(set(indices))], n)

    @classmethod
    def span_matrices(cls, mats, n=None, cols=None):
        """Span of matrices, flattened row-major."""
        if n is None:
            if not mats:
                raise InputError("shape needed for an empty span of matrices")
            n, cols = mats[0].rows, mats[0].cols
        cols = n if cols is None else cols
        return cls([m.flat() for m in mats], n * cols)

    @property
    def dim(self):
        return len(self._rows)

    @property
    def basis(self):
        return RatMatrix._raw(self._rows, len(self._rows), self.ambient_dim)

    def vectors(self):
        return self._rows

    def basis_matrices(self, n, cols=None):
        cols = n if cols is None else cols
        return [RatMatrix.from_flat(n, cols, r) for r in self._rows]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient_dim, self._rows))
        return self._hash

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"ambient dims {self.ambient_dim} and {other.ambient_dim}")

    def _vec(self, v):
        v = tuple(to_rational(x) for x in (v.flat() if isinstance(v, RatMatrix) else v))
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        return v

    def reduce_mod(self, v):
        """Canonical coset representative: v with every pivot coordinate cleared."""
        out = list(self._vec(v))
        for row, p in zip(self._rows, self.pivots):
            c = out[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        out[j] -= c * row[j]
        return tuple(out)

    def contains(self, v):
        return not any(self.reduce_mod(v))

    def coords(self, v):
        """Coordinates of v in the stored basis; NotContained if v is outside."""
        v = self._vec(v)
        if any(self.reduce_mod(v)):
            raise NotContained("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def issubset(self, other):
        self._check(other)
        return all(other.contains(r) for r in self._rows)

    def __le__(self, other):
        return self.issubset(other)

    def sum(self, other):
        self._check(other)
        return Subspace(self._rows + other._rows, self.ambient_dim)

    __add__ = sum

    def annihilator(self):
        """Vectors orthogonal (standard pairing) to the subspace."""
        return Subspace(_nullspace_rows(self._rows, self.ambient_dim), self.ambient_dim)

    def intersect(self, other):
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        eqs = self.annihilator()._rows + other.annihilator()._rows
        return Subspace(_nullspace_rows(eqs, self.ambient_dim), self.ambient_dim)

    __and__ = intersect

    def quotient_dim(self, other):
        """dim(other / self) for self contained in other."""
        if not self.issubset(other):
            raise NotContained("quotient_dim needs a subspace of the second argument")
        return other.dim - self.dim

    def complement_in(self, other):
        """Canonical complement of (self ∩ other) inside other, via coset reduction."""
        self._check(other)
        return Subspace([self.reduce_mod(r) for r in other._rows], self.ambient_dim)


def subspace_sum(a, b):
    return a.sum(b)


def intersect(a, b):
    return a.intersect(b)


def contains(a, v):
    return a.contains(v)


def reduce_mod(a, v):
    return a.reduce_mod(v)


def quotient_dim(a, b):
    return a.quotient_dim(b)


# ---------------------------------------------------------------------------
# Univariate polynomials: tuples of Fractions, lowest degree first.


def poly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def poly_add(p, q):
    n = max(len(p), len(q))
    return poly_trim(
        (p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO) for i in range(n)
    )


def poly_sub(p, q):
    return poly_add(p, tuple(-c for c in q))


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    q = poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(poly_trim(p))
    out = [ZERO] * max(len(r) - len(q) + 1, 0)
    lead = q[-1]
    while len(r) >= len(q) and r:
        c = r[-1] / lead
        k = len(r) - len(q)
        out[k] = c
        for i, b in enumerate(q):
            r[k + i] -= c * b
        r = list(poly_trim(r))
    return poly_trim(out), tuple(r)


def poly_monic(p):
    p = poly_trim(p)
    if not p:
        return p
    lead = p[-1]
    return tuple(c / lead for c in p)


def poly_gcd(p, q):
    p, q = poly_trim(p), poly_trim(q)
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return poly_monic(p)


def poly_lcm(p, q):
    if not p or not q:
        return ()
    return poly_monic(poly_divmod(poly_mul(p, q), poly_gcd(p, q))[0])


def poly_deriv(p):
    return poly_trim(i * c for i, c in enumerate(p) if i > 0)


def poly_eval(p, x):
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_eval_matrix(p, a):
    n = a.rows
    acc = RatMatrix.zeros(n)
    ident = RatMatrix.identity(n)
    for c in reversed(p):
        acc = acc @ a + ident.scale(c)
    return acc


def squarefree_part(p):
    p = poly_monic(p)
    return poly_monic(poly_divmod(p, poly_gcd(p, poly_deriv(p)))[0])


def rational_roots(p):
    """Distinct rational roots of p, ascending."""
    from math import gcd

    p = poly_trim(p)
    roots = []
    while p and not p[0]:
        if ZERO not in roots:
            roots.append(ZERO)
        p = p[1:]
    if len(p) <= 1:
        return sorted(roots)
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(k):
        return [d for d in range(1, k + 1) if k % d == 0]

    for num in divisors(a0):
        for dd in divisors(an):
            for sgn in (1, -1):
                r = Fraction(sgn * num, dd)
                if r not in roots and poly_eval(p, r) == 0:
                    roots.append(r)
    return sorted(roots)


# ---------------------------------------------------------------------------
# Minimal polynomial, semisimplicity, Jordan-Chevalley, Sylvester


def _vector_annihilator(a, v):
    """Monic least-degree p with p(a) v = 0, from the Krylov sequence of v."""
    krylov = [tuple(v)]
    while True:
        nxt = a.apply(krylov[-1])
        krylov.append(nxt)
        ns = _nullspace_rows([[k[i] for k in krylov] for i in range(a.rows)], len(krylov))
        if ns:
            # earlier Krylov vectors are independent, so the dependency is unique up to scale
            return poly_monic(ns[0])


def minimal_polynomial(a):
    """Coefficients (lowest degree first) of the monic minimal polynomial of a."""
    if not a.is_square():
        raise InputError("minimal polynomial of a non-square matrix")
    n = a.rows
    p = (ONE,)
    for i in range(n):
        e = tuple(ONE if j == i else ZERO for j in range(n))
        if not any(poly_eval_matrix(p, a).apply(e)):
            continue
        p = poly_lcm(p, _vector_annihilator(a, e))
    return p


def is_semisimple(a):
    p = minimal_polynomial(a)
    return len(poly_gcd(p, poly_deriv(p))) == 1


def jordan_chevalley(a):
    """Return (s, n) with a = s + n, s semisimple, n nilpotent, [s, n] = 0.

    s is the root of the squarefree part q of the minimal polynomial reached
    by the Newton iteration s <- s - q(s) q'(s)^{-1} started at a.
    """
    q = squarefree_part(minimal_polynomial(a))
    dq = poly_deriv(q)
    s = a
    while True:
        qs = poly_eval_matrix(q, s)
        if qs.is_zero():
            break
        s = s - qs @ poly_eval_matrix(dq, s).inverse()
    return s, a - s


def sylvester_solve(a, b, c):
    """Solve a X - X b = c; free parameters of the solution family are set to 0."""
    if not (a.is_square() and b.is_square()) or c.shape != (a.rows, b.rows):
        raise InputError("sylvester_solve needs square a, b and c of shape (rows a, rows b)")
    m, p = a.rows, b.rows
    eqs = []
    for i in range(m):
        for j in range(p):
            row = [ZERO] * (m * p)
            for k in range(m):
                if a[i, k]:
                    row[k * p + j] += a[i, k]
            for k in range(p):
                if b[k, j]:
                    row[i * p + k] -= b[k, j]
            eqs.append(row)
    sol = solve_linear(RatMatrix._raw(tuple(tuple(r) for r in eqs), m * p, m * p), c.flat())
    if sol is None:
        raise NoSolution("a X - X b = c is inconsistent")
    return RatMatrix.from_flat(m, p, sol)
