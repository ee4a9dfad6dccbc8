"""Steiner triple systems on GF(3^m) from polynomials whose graph has no 2-secants.

If a function f over GF(3^m) has the characteristic-3 cubic distribution,
every pair of graph points lies on a line that meets the graph exactly once
more, and those collinear triples of abscissae form an STS(3^m).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import config
from .classify import is_cubic_like
from .closed_forms import cubic_target
from .distributions import intersection_distribution
from .polyfn import Monomial, PolyFn, Tabulated


class PreconditionError(ValueError):
    """The polynomial does not have the distribution needed to define blocks."""


class TripleSystem:
    """Points ``0..v-1`` and a sorted list of sorted triples."""

    def __init__(self, v, blocks):
        blocks = np.asarray(blocks, dtype=np.int64).reshape(-1, 3)
        blocks = np.sort(blocks, axis=1)
        order = np.lexsort(blocks.T[::-1])
        self.v = int(v)
        self.blocks = blocks[order]
        self._third = None

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return (isinstance(other, TripleSystem) and self.v == other.v
                and np.array_equal(self.blocks, other.blocks))

    def block_set(self):
        return {tuple(int(x) for x in b) for b in self.blocks}

    @property
    def third(self):
        """``third[x, y]`` is the point completing the block through x and y (-1 on the diagonal).

        Only meaningful for a valid STS; use :func:`validate_sts` first on untrusted input.
        """
        if self._third is None:
            t = np.full((self.v, self.v), -1, dtype=np.int64)
            a, b, c = self.blocks.T
            for x, y, z in ((a, b, c), (b, c, a), (a, c, b)):
                t[x, y] = z
                t[y, x] = z
            self._third = t
        return self._third

    def relabel(self, perm):
        """Image under the point map ``x -> perm[x]``."""
        perm = np.asarray(perm, dtype=np.int64)
        return TripleSystem(self.v, perm[self.blocks])

    def format(self):
        lines = [f"v={self.v}"]
        lines.extend(" ".join(map(str, b)) for b in self.blocks.tolist())
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text):
        rows = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not rows or not rows[0][0].startswith("v="):
            raise ValueError("block file must start with a 'v=<n>' header")
        v = int(rows[0][0][2:])
        blocks = [[int(x) for x in r] for r in rows[1:]]
        if any(len(b) != 3 for b in blocks):
            raise ValueError("every block line needs exactly three points")
        return cls(v, blocks)

    def __repr__(self):
        return f"<TripleSystem v={self.v} blocks={len(self)}>"


# ---------------------------------------------------------------------------
# construction

def _check_precondition(spec, f):
    if isinstance(f, Monomial) and 1 <= f.d <= spec.q - 1:
        ok, _ = is_cubic_like(spec, f.d)
    else:
        ok = intersection_distribution(f) == cubic_target(spec)
    if not ok:
        raise PreconditionError(f"{f.label()} over GF({spec.q}) does not have the "
                                "intersection distribution of x^3")


def slope_matrix(spec, f):
    """``S[x1, x] = (f(x) - f(x1)) / (x - x1)``, with -1 on the diagonal."""
    fx = f.values()
    xs = spec.elements()
    num = spec.sub(fx[None, :], fx[:, None])
    den = spec.sub(xs[None, :], xs[:, None])
    np.fill_diagonal(den, 1)
    s = spec.div(num, den)
    np.fill_diagonal(s, -1)
    return s


def build_sts(spec, f: PolyFn, check=True) -> TripleSystem:
    if spec.p != 3:
        raise ValueError(f"Steiner triple systems need characteristic 3, got p={spec.p}")
    config.check_budget("steiner", spec.q)
    if check:
        _check_precondition(spec, f)
    q = spec.q
    s = slope_matrix(spec, f)
    order = np.argsort(s, axis=1, kind="stable")[:, 1:]   # column 0 is the diagonal
    ss = np.take_along_axis(s, order, axis=1)
    first, second = ss[:, 0::2], ss[:, 1::2]
    if not np.array_equal(first, second) or np.any(second[:, :-1] == first[:, 1:]):
        raise AssertionError(f"some slope from a point of the graph of {f.label()} "
                             "does not have exactly two partners")
    x1 = np.repeat(np.arange(q), (q - 1) // 2)
    blocks = np.stack([x1, order[:, 0::2].ravel(), order[:, 1::2].ravel()], axis=1)
    blocks = np.unique(np.sort(blocks, axis=1), axis=0)
    return TripleSystem(q, blocks)


# ---------------------------------------------------------------------------
# checks

@dataclass
class StsCheck:
    passed: bool
    reason: str | None = None
    pair: tuple | None = None

    def as_dict(self):
        return {"passed": self.passed, "reason": self.reason,
                "pair": list(self.pair) if self.pair else None}


def validate_sts(ts: TripleSystem) -> StsCheck:
    v = ts.v
    b = ts.blocks
    if b.size and (b.min() < 0 or b.max() >= v):
        return StsCheck(False, "point-out-of-range")
    if np.any(b[:, 0] == b[:, 1]) or np.any(b[:, 1] == b[:, 2]):
        return StsCheck(False, "repeated-point-in-block")
    cover = np.zeros((v, v), dtype=np.int64)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        np.add.at(cover, (b[:, i], b[:, j]), 1)
    cover = cover + cover.T
    iu = np.triu_indices(v, 1)
    c = cover[iu]
    for bad, reason in ((c > 1, "pair-covered-twice"), (c == 0, "pair-uncovered")):
        if bad.any():
            k = int(np.flatnonzero(bad)[0])
            return StsCheck(False, reason, (int(iu[0][k]), int(iu[1][k])))
    return StsCheck(True)


def is_affine(ts: TripleSystem, spec) -> bool:
    """Do all blocks sum to zero in GF(3^m)?"""
    b = ts.blocks
    return bool(np.all(spec.add(spec.add(b[:, 0], b[:, 1]), b[:, 2]) == 0))


def is_linearized(f: PolyFn) -> bool:
    """``f(x + y) = f(x) + f(y)`` and ``f(a x) = a f(x)`` for a in the prime field."""
    F = f.field
    fx = f.values()
    xs = F.elements()
    add = np.array_equal(fx[F.add(xs[:, None], xs[None, :])], F.add(fx[:, None], fx[None, :]))
    scal = all(np.array_equal(fx[F.mul(a, xs)], F.mul(a, fx)) for a in range(F.p))
    return bool(add and scal)


def shifted(f: PolyFn, b, c) -> Tabulated:
    """``f(x) + b x + c`` as a value table."""
    F = f.field
    vals = F.add(F.add(f.values(), F.mul(int(b), F.elements())), int(c))
    return Tabulated(F, vals, label=f"{f.label()}+{b}x+{c}")


def maps_blocks(ts1, ts2, perm) -> bool:
    """Is ``x -> perm[x]`` a bijection from the blocks of ts1 onto those of ts2?"""
    perm = np.asarray(perm, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(ts1.v)):
        return False
    return ts1.v == ts2.v and ts1.relabel(perm) == ts2


# ---------------------------------------------------------------------------
# invariants

def _line_pairs(ts, a):
    """The partner pairs ``(u, w)`` of the blocks through ``a``."""
    t = ts.third[a]
    others = np.flatnonzero(t > np.arange(ts.v))
    others = others[others != a]
    return others, t[others]


def pasch_count(ts: TripleSystem) -> int:
    """Number of four-block, six-point subconfigurations.

    Two blocks through a point a, say {a, u, w} and {a, u', w'}, lie in a Pasch
    configuration exactly when ``third(u, u') == third(w, w')`` (or the crossed
    pairing).  Every configuration is seen once from each of its six points.
    """
    t = ts.third
    total = 0
    for a in range(ts.v):
        u, w = _line_pairs(ts, a)
        straight = t[u[:, None], u[None, :]] == t[w[:, None], w[None, :]]
        crossed = t[u[:, None], w[None, :]] == t[w[:, None], u[None, :]]
        iu = np.triu_indices(len(u), 1)
        total += int(straight[iu].sum() + crossed[iu].sum())
    if total % 6:
        raise AssertionError("Pasch tally is not a multiple of 6; input is not an STS")
    return total // 6


def cycle_spectrum(ts: TripleSystem) -> dict:
    """Census of cycle types of ``z -> third(b, third(a, z))`` over ordered pairs (a, b)."""
    t = ts.third.tolist()
    v = ts.v
    census = Counter()
    for a in range(v):
        ta = t[a]
        for b in range(v):
            if a == b:
                continue
            tb = t[b]
            c = ta[b]
            seen = [False] * v
            seen[a] = seen[b] = seen[c] = True
            lengths = []
            for z in range(v):
                if seen[z]:
                    continue
                n = 0
                while not seen[z]:
                    seen[z] = True
                    z = tb[ta[z]]
                    n += 1
                lengths.append(n)
            census[tuple(sorted(lengths))] += 1
    return dict(sorted(census.items()))


# ---------------------------------------------------------------------------
# isomorphism

@dataclass
class IsoVerdict:
    decision: str                      # "isomorphic" | "non-isomorphic" | "undecided"
    witness: object = None
    nodes: int = 0

    def as_dict(self):
        w = self.witness
        if isinstance(w, np.ndarray):
            w = w.tolist()
        elif isinstance(w, dict):
            w = {k: _jsonable(x) for k, x in w.items()}
        return {"decision": self.decision, "witness": w, "nodes": self.nodes}


def _jsonable(x):
    if isinstance(x, dict):
        if any(isinstance(k, tuple) for k in x):
            return [[list(k), _jsonable(n)] for k, n in x.items()]
        return {k: _jsonable(n) for k, n in x.items()}
    if isinstance(x, (tuple, list)):
        return [_jsonable(e) for e in x]
    return x


def _base_points(ts):
    """Points whose closure under ``third`` is everything, chosen greedily."""
    t = ts.third
    inside = np.zeros(ts.v, dtype=bool)
    members, base = [], []
    for p in range(ts.v):
        if inside[p]:
            continue
        base.append(p)
        queue = [p]
        while queue:
            x = queue.pop()
            if inside[x]:
                continue
            inside[x] = True
            for y in members:
                queue.append(int(t[x, y]))
            members.append(x)
    return base


def _extend(t1, t2, phi, used, mapped, p, img):
    """Map p to img and close under ``third``; return the new points or None on conflict."""
    added = []
    queue = [(p, img)]
    while queue:
        x, y = queue.pop()
        if phi[x] >= 0:
            if phi[x] != y:
                return _undo(phi, used, mapped, added)
            continue
        if used[y]:
            return _undo(phi, used, mapped, added)
        for z in mapped:
            queue.append((t1[x][z], t2[y][phi[z]]))
        phi[x] = y
        used[y] = True
        mapped.append(x)
        added.append(x)
    return added


def _undo(phi, used, mapped, added):
    for x in added:
        used[phi[x]] = False
        phi[x] = -1
        mapped.remove(x)
    return None


def isomorphic(ts1: TripleSystem, ts2: TripleSystem, budget=1_000_000,
               invariants=True) -> IsoVerdict:
    if ts1.v != ts2.v:
        raise ValueError(f"point counts differ: {ts1.v} vs {ts2.v}")
    if len(ts1) != len(ts2):
        return IsoVerdict("non-isomorphic", {"block_count": (len(ts1), len(ts2))})
    if invariants:
        p1, p2 = pasch_count(ts1), pasch_count(ts2)
        if p1 != p2:
            return IsoVerdict("non-isomorphic", {"pasch_count": (p1, p2)})
        c1, c2 = cycle_spectrum(ts1), cycle_spectrum(ts2)
        if c1 != c2:
            return IsoVerdict("non-isomorphic", {"cycle_spectrum": (c1, c2)})
    v = ts1.v
    t1, t2 = ts1.third.tolist(), ts2.third.tolist()
    base = _base_points(ts1)
    phi, used, mapped = [-1] * v, [False] * v, []
    nodes = 0

    def search(k):
        nonlocal nodes
        if k == len(base):
            return len(mapped) == v
        p = base[k]
        for img in range(v):
            if used[img]:
                continue
            nodes += 1
            if nodes > budget:
                raise _OutOfBudget
            added = _extend(t1, t2, phi, used, mapped, p, img)
            if added is None:
                continue
            if search(k + 1):
                return True
            _undo(phi, used, mapped, added)
        return False

    try:
        found = search(0)
    except _OutOfBudget:
        return IsoVerdict("undecided", {"budget": budget}, nodes)
    if not found:
        return IsoVerdict("non-isomorphic", {"exhaustive_search": True}, nodes)
    perm = np.array(phi, dtype=np.int64)
    if not maps_blocks(ts1, ts2, perm):
        raise AssertionError("isomorphism search returned a map that does not preserve blocks")
    return IsoVerdict("isomorphic", perm, nodes)


class _OutOfBudget(Exception):
    pass
