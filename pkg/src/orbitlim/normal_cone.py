"""Derivation functionals D^k_{w,v} and randomized tangent-ideal membership.

A polynomial function on V is a Form whose variables are the coordinates of
V (``rep.coords`` order), or a list of such Forms read as their sum.
"""

import random
from dataclasses import dataclass
from math import comb
from typing import Optional

from .errors import InputError, NotTangent, PrecheckFailed
from .forms import Form, FormsDerivation
from .linalg import ONE, ZERO, RatMatrix, Subspace, nullspace, to_rational
from .stabilizers import lie_basis, orbit_tangent


def vec_coords(v, rep=None):
    if rep is not None:
        return rep.coords(v)
    if isinstance(v, RatMatrix):
        return v.flat()
    if isinstance(v, Form):
        return FormsDerivation(v.n_vars, v.degree).coords(v)
    return tuple(to_rational(x) for x in v)


def _terms(f):
    if isinstance(f, Form):
        return f.terms()
    out = []
    for part in f:
        out.extend(part.terms())
    return out


def _nvars(f):
    return f.n_vars if isinstance(f, Form) else f[0].n_vars


def dk(f, w, v, k, rep=None):
    """Coefficient of eps^k in f(w + eps v)."""
    if k < 0:
        raise InputError("k must be nonnegative")
    wc, vc = vec_coords(w, rep), vec_coords(v, rep)
    if len(wc) != _nvars(f) or len(vc) != len(wc):
        raise InputError("point and direction must match the function's variables")
    cache = {}

    def binom_series(i, m):
        key = (i, m)
        if key not in cache:
            a, b = wc[i], vc[i]
            cache[key] = [comb(m, j) * a ** (m - j) * b**j for j in range(min(m, k) + 1)]
        return cache[key]

    total = ZERO
    for exp, c in _terms(f):
        poly = [c]
        for i, m in enumerate(exp):
            if not m:
                continue
            ser = binom_series(i, m)
            new = [ZERO] * min(len(poly) + len(ser) - 1, k + 1)
            for p, x in enumerate(poly):
                if x:
                    for q, y in enumerate(ser):
                        if p + q > k:
                            break
                        if y:
                            new[p + q] += x * y
            poly = new
            if not any(poly):
                break
        if len(poly) > k:
            total += poly[k]
    return total


def leibniz_check(f, f2, w, v, r, s, rep=None):
    return dk(f * f2, w, v, r + s, rep) == dk(f, w, v, r, rep) * dk(f2, w, v, s, rep)


# ---------------------------------------------------------------------------
# Group samplers


class FullGL:
    """Random integer matrices with entries in [-entry_bound, entry_bound]."""

    kind = "FullGL"

    def __init__(self, n, entry_bound=5, require_invertible=True):
        self.n = n
        self.entry_bound = entry_bound
        self.require_invertible = require_invertible

    def sample(self, rng):
        b = self.entry_bound
        while True:
            g = RatMatrix([[rng.randint(-b, b) for _ in range(self.n)] for _ in range(self.n)])
            if not self.require_invertible or g.det() != 0:
                return g


class SubgroupGenerators:
    """Points g(t) on rational curves inside a subgroup, t drawn from given values."""

    kind = "SubgroupGenerators"

    def __init__(self, curves, params):
        if not curves or not params:
            raise InputError("need at least one curve and one parameter value")
        self.curves = list(curves)
        self.params = list(params)

    def sample(self, rng):
        curve = self.curves[rng.randrange(len(self.curves))]
        g = curve(self.params[rng.randrange(len(self.params))])
        if g.det() == 0:
            raise InputError("subgroup curve produced a singular matrix")
        return g


@dataclass
class Rejected:
    witness_g: RatMatrix
    value: object
    sample_index: int

    verdict = "Rejected"


@dataclass
class ProbablyMember:
    samples: int
    seed: int

    verdict = "ProbablyMember"


def _random_direction(rng, n, bound=5):
    return tuple(to_rational(rng.randint(-bound, bound)) for _ in range(n))


def _precheck(f, k, point, rng, label):
    for j in range(k):
        v = _random_direction(rng, len(point))
        if dk(f, point, v, j) != 0:
            raise PrecheckFailed(f"f does not vanish to order {k} at {label} (order {j} term nonzero)")


def membership_Jk(rep, f, k, z, y_e, sampler, n_samples=40, seed=0):
    """Monte Carlo test of D^k_{gz, g y_e}(f) = 0 over sampled g, identity first."""
    rng = random.Random(seed)
    gs = [RatMatrix.identity(rep.n)] + [sampler.sample(rng) for _ in range(n_samples)]
    for idx, g in enumerate(gs):
        gz = rep.coords(rep.apply_group(g, z))
        gy = rep.coords(rep.apply_group(g, y_e))
        _precheck(f, k, gz, rng, f"sample {idx}")
        val = dk(f, gz, gy, k)
        if val != 0:
            return Rejected(g, val, idx)
    return ProbablyMember(len(gs), seed)


def tangent_insensitivity_check(rep, f, k, w, v, vprime):
    T = Subspace.zero(rep.ambient_dim) if w.is_zero() else orbit_tangent(rep, w)
    if not T.contains(rep.coords(vprime)):
        raise NotTangent("v' is not tangent to the orbit at w")
    return dk(f, w, v + vprime, k, rep) == dk(f, w, v, k, rep)


@dataclass
class InvarianceResult:
    ok: bool
    witness: Optional[RatMatrix] = None
    value: object = None

    def __bool__(self):
        return self.ok


def hye_invariance_check(rep, f, k, z, y_e, Hye, seed=0, prechecks=3):
    """D^k_{z, h.y_e}(f) = 0 for every basis element h of Hye."""
    rng = random.Random(seed)
    zc = rep.coords(z)
    for _ in range(prechecks):
        _precheck(f, k, zc, rng, "z")
    for h in lie_basis(Hye):
        val = dk(f, zc, rep.coords(rep.apply_lie(h, y_e)), k)
        if val != 0:
            return InvarianceResult(False, h, val)
    return InvarianceResult(True)


def vanishing_polynomials(rep, z, degree, weight=None, n_samples=None, seed=0, entry_bound=2, check_samples=10):
    """Forms of the given degree in V-coordinates vanishing on sampled orbit points of z.

    The orbit-closure ideal is stable under the diagonal torus, so the search
    may be restricted to one torus weight (sum of coordinate characters).
    Candidates come from interpolation on random points g . z and are
    re-checked on fresh samples; any that fail are discarded.
    """
    from itertools import combinations_with_replacement

    chars = rep.coord_characters()
    monos = []
    for combo in combinations_with_replacement(range(rep.ambient_dim), degree):
        if weight is not None:
            tot = [0] * len(chars[0])
            for i in combo:
                tot = [a + b for a, b in zip(tot, chars[i])]
            if tuple(tot) != tuple(weight):
                continue
        e = [0] * rep.ambient_dim
        for i in combo:
            e[i] += 1
        monos.append(tuple(e))
    if not monos:
        return []
    rng = random.Random(seed)
    sampler = FullGL(rep.n, entry_bound)
    n_samples = len(monos) + 10 if n_samples is None else n_samples

    def row(point):
        out = []
        for e in monos:
            val = ONE
            for i, m in enumerate(e):
                if m:
                    val *= point[i] ** m
            out.append(val)
        return out

    pts = [rep.coords(z)] + [rep.coords(rep.apply_group(sampler.sample(rng), z)) for _ in range(n_samples)]
    ker = nullspace(RatMatrix([row(p) for p in pts]))
    polys = [Form(rep.ambient_dim, degree, [(e, c) for e, c in zip(monos, vec) if c]) for vec in ker.vectors()]
    fresh = [rep.coords(rep.apply_group(sampler.sample(rng), z)) for _ in range(check_samples)]
    return [p for p in polys if all(p.evaluate(q) == 0 for q in fresh)]
