"""Brute-force multiplicity and intersection distributions.

For a function f on F_q and a slope b, ``M_i(f, b)`` counts the intercepts c
for which ``f(x) - b x - c`` has exactly i roots; summing over b gives the
intersection distribution ``v_i(f)``.  Everything here is exhaustive
enumeration and is the reference the closed forms are checked against.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from functools import lru_cache, partial
from math import ceil, gcd

import numpy as np

from . import config
from .parallel import chunks, pmap
from .polyfn import Cubic, Dense, Monomial, PolyFn

_CELLS = 1 << 21


def _sparse(counts):
    return {int(i): int(c) for i, c in enumerate(counts) if c}


@dataclass(frozen=True)
class MultiplicityRow:
    b: int
    counts: dict
    nonzero_only: bool = False

    def __getitem__(self, i):
        return self.counts.get(i, 0)

    def key(self):
        return tuple(sorted(self.counts.items()))

    def total(self):
        return sum(self.counts.values())

    def weighted_total(self):
        return sum(i * c for i, c in self.counts.items())

    def same_counts(self, other):
        return self.counts == other.counts

    def as_dict(self):
        return {"b": self.b, "counts": {str(i): self.counts[i] for i in sorted(self.counts)}}


@dataclass(frozen=True)
class IntersectionDistribution:
    counts: dict

    def __getitem__(self, i):
        return self.counts.get(i, 0)

    @property
    def non_hitting(self):
        return self.counts.get(0, 0)

    def as_dict(self):
        return {str(i): self.counts[i] for i in sorted(self.counts)}

    @classmethod
    def from_values(cls, values):
        """From a dense sequence ``(v_0, v_1, ...)``."""
        return cls(_sparse(values))


@dataclass(frozen=True)
class PermutationSet:
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __contains__(self, c):
        return c in self.members


@dataclass
class EquationCheck:
    passed: bool
    residuals: dict = dc_field(default_factory=dict)

    @property
    def failed(self):
        return [k for k, r in self.residuals.items() if r]


# ---------------------------------------------------------------------------
# core enumeration

@lru_cache(maxsize=4)
def _slope_products(field):
    """``b * x`` for all ``(b, x)`` when the table is small enough to cache."""
    x = field.elements()
    return field.mul(x[:, None], x[None, :])


def _bx(field, bs, xs):
    if field.q * field.q <= _CELLS and xs.size == field.q:
        return _slope_products(field)[bs]
    return field.mul(bs[:, None], xs[None, :])


def _count_rows(field, fx, bs, nonzero_only=False):
    """Array ``M[k, i]`` = ``M_i(f, bs[k])`` (or the ``M_i^*`` variant)."""
    q = field.q
    xs = field.elements()
    if nonzero_only:
        xs, fx = xs[1:], fx[1:]
    out = np.zeros((len(bs), q + 1), dtype=np.int64)
    step = max(1, _CELLS // q)
    for s in range(0, len(bs), step):
        b = np.asarray(bs[s:s + step], dtype=np.int64)
        k = len(b)
        vals = field.sub(fx[None, :], _bx(field, b, xs))
        sols = np.bincount((vals + (np.arange(k) * q)[:, None]).ravel(),
                           minlength=k * q).reshape(k, q)
        out[s:s + k] = np.bincount((sols + (np.arange(k) * (q + 1))[:, None]).ravel(),
                                   minlength=k * (q + 1)).reshape(k, q + 1)
    return out


def _count_chunk(field, fx, nonzero_only, bs):
    return _count_rows(field, fx, bs, nonzero_only)


def multiplicity_matrix(f: PolyFn, nonzero_only=False, jobs=1):
    """``M[b, i]`` for every slope b, as a ``(q, q+1)`` integer array."""
    field = f.field
    bs = list(range(field.q))
    if jobs and jobs > 1:
        parts = pmap(partial(_count_chunk, field, f.values(), nonzero_only),
                     chunks(bs, jobs), jobs)
        return np.concatenate(parts)
    return _count_rows(field, f.values(), np.arange(field.q), nonzero_only)


def multiplicity_row(f: PolyFn, b: int) -> MultiplicityRow:
    m = _count_rows(f.field, f.values(), np.array([int(b)]))[0]
    return MultiplicityRow(int(b), _sparse(m))


def multiplicity_row_nonzero(f: PolyFn, b: int) -> MultiplicityRow:
    """Like :func:`multiplicity_row` but only nonzero roots are counted."""
    m = _count_rows(f.field, f.values(), np.array([int(b)]), nonzero_only=True)[0]
    return MultiplicityRow(int(b), _sparse(m), nonzero_only=True)


def multiplicity_distribution(f: PolyFn, jobs=1):
    """All rows, ordered by b."""
    mat = multiplicity_matrix(f, jobs=jobs)
    return [MultiplicityRow(b, _sparse(row)) for b, row in enumerate(mat)]


def intersection_distribution(f: PolyFn, jobs=1) -> IntersectionDistribution:
    mat = multiplicity_matrix(f, jobs=jobs)
    dist = IntersectionDistribution(_sparse(mat.sum(axis=0)))
    check = check_basic_equations(dist, f.field.q)
    if not check.passed:
        raise AssertionError(f"basic equations violated for {f.label()} over "
                             f"GF({f.field.q}): residuals {check.residuals}")
    return dist


def check_basic_equations(dist: IntersectionDistribution, q) -> EquationCheck:
    """Sum of v_i, sum of i v_i and sum of i(i-1) v_i against q^2, q^2, q(q-1)."""
    c = dist.counts
    res = {
        "count": sum(c.values()) - q * q,
        "incidences": sum(i * v for i, v in c.items()) - q * q,
        "pairs": sum(i * (i - 1) * v for i, v in c.items()) - q * (q - 1),
    }
    return EquationCheck(not any(res.values()), res)


# ---------------------------------------------------------------------------
# normalization of cubics

@dataclass(frozen=True)
class CubicNormalization:
    """Records ``f = lead * (x^3 - a x^2) + linear * x + constant``.

    Row ``b`` of ``f`` equals row ``relabel(b)`` of the normal form.
    """

    field: object
    a: int
    lead: int
    linear: int
    constant: int

    def relabel(self, b):
        F = self.field
        return F.div(F.sub(int(b), self.linear), self.lead)

    def poly(self):
        return Cubic(self.field, self.a)


def normalize_cubic(field, coeffs) -> CubicNormalization:
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) != 4:
        raise ValueError(f"expected a degree-3 polynomial, got coefficients {coeffs}")
    c0, c1, c2, c3 = coeffs
    a = field.neg(field.div(c2, c3))
    return CubicNormalization(field, a, c3, c1, c0)


# ---------------------------------------------------------------------------
# permutation behaviour and the non-hitting bounds

def permutation_set(f: PolyFn) -> PermutationSet:
    """All c with ``f(x) + c x`` a permutation of F_q."""
    field = f.field
    q = field.q
    fx = f.values()
    xs = field.elements()
    members = []
    step = max(1, _CELLS // q)
    for s in range(0, q, step):
        cs = np.arange(s, min(q, s + step))
        k = len(cs)
        vals = field.add(fx[None, :], _bx(field, cs, xs))
        hits = np.bincount((vals + (np.arange(k) * q)[:, None]).ravel(),
                           minlength=k * q).reshape(k, q)
        members.extend(int(c) for c in cs[(hits == 1).all(axis=1)])
    return PermutationSet(frozenset(members))


@dataclass
class V0Bounds:
    degree: int
    n_f: int
    lower: int
    upper: int
    v0: int

    @property
    def lower_tight(self):
        return self.v0 == self.lower

    @property
    def upper_tight(self):
        return self.v0 == self.upper

    def as_dict(self):
        return {"degree": self.degree, "n_f": self.n_f, "lower": self.lower,
                "upper": self.upper, "v0": self.v0,
                "lower_tight": self.lower_tight, "upper_tight": self.upper_tight}


def check_v0_bounds(f: PolyFn) -> V0Bounds:
    """Evaluate ``ceil((q-1)/d)(q-|N_f|) <= v_0 <= (q-ceil(q/d))(q-|N_f|)``."""
    q = f.field.q
    d = f.degree()
    if d is None or not 2 <= d <= q - 1:
        raise ValueError(f"degree {d} outside [2, q-1] for q={q}")
    nf = len(permutation_set(f))
    v0 = intersection_distribution(f).non_hitting
    lower = ceil((q - 1) / d) * (q - nf)
    upper = (q - ceil(q / d)) * (q - nf)
    if not lower <= v0 <= upper:
        raise AssertionError(f"v0={v0} outside [{lower}, {upper}] for {f.label()}")
    return V0Bounds(d, nf, lower, upper, v0)


# ---------------------------------------------------------------------------
# monomials

def exponent_inverse(d, q):
    """Inverse of d modulo q-1 normalized to [1, q-1], or None."""
    n = q - 1
    if n == 1:
        return 1
    if gcd(d, n) != 1:
        return None
    r = pow(d, -1, n)
    return r or n


@dataclass(frozen=True)
class NonHitEntry:
    exponents: tuple
    v0: int


def monomial_nonhitting_table(field, limit=None, jobs=1):
    """``(d, v_0(x^d))`` for ``d = 1..q-1``; invertible d grouped with d^{-1}."""
    config.check_budget("nonhit_table", field.q, limit)
    q = field.q
    v0 = dict(zip(range(1, q), pmap(partial(_monomial_v0, field), range(1, q), jobs)))
    out, seen = [], set()
    for d in range(1, q):
        if d in seen:
            continue
        inv = exponent_inverse(d, q)
        group = (d,) if inv is None or inv == d else tuple(sorted((d, inv)))
        if len({v0[e] for e in group}) != 1:
            raise AssertionError(f"x^{group[0]} and its inverse differ in v0 over GF({q})")
        seen.update(group)
        out.append(NonHitEntry(group, v0[d]))
    return out


def _monomial_v0(field, d):
    return intersection_distribution(Monomial(field, d)).non_hitting


def inverse_distribution_check(f: PolyFn) -> bool:
    """Do f and its compositional inverse have the same multiset of rows?"""
    g = f.inverse()
    rows_f = Counter(r.key() for r in multiplicity_distribution(f))
    rows_g = Counter(r.key() for r in multiplicity_distribution(g))
    return rows_f == rows_g


def random_dense(field, rng, max_degree):
    n = int(rng.integers(1, max_degree + 1))
    coeffs = rng.integers(0, field.q, size=n + 1)
    return Dense(field, coeffs)
