"""Slow, table-free reference implementations used as test oracles.

Nothing here touches the log/exp tables or the vectorised counting paths of
the package; field elements are coefficient vectors reduced by hand.
"""

from collections import Counter
from itertools import combinations


class NaiveField:
    """GF(p^m) as coefficient vectors modulo a monic polynomial (constant first)."""

    def __init__(self, p, m, modulus):
        self.p, self.m, self.q = p, m, p**m
        self.modulus = list(modulus)

    def vec(self, i):
        out = []
        for _ in range(self.m):
            i, r = divmod(i, self.p)
            out.append(r)
        return out

    def idx(self, v):
        return sum(c * self.p**j for j, c in enumerate(v))

    def add(self, a, b):
        return self.idx([(x + y) % self.p for x, y in zip(self.vec(a), self.vec(b))])

    def neg(self, a):
        return self.idx([(-x) % self.p for x in self.vec(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        p, m = self.p, self.m
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(self.vec(a)):
            for j, y in enumerate(self.vec(b)):
                prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(len(prod) - 1, m - 1, -1):
            c = prod[k]
            if c:
                for j in range(m + 1):
                    prod[k - m + j] = (prod[k - m + j] - c * self.modulus[j]) % p
        return self.idx(prod[:m])

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def inv(self, a):
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError


def values(F, f):
    return [int(v) for v in f.values()]


def multiplicity_row(F, fx, b, nonzero=False):
    """``{i: M_i}`` by counting roots of f(x) - bx - c for every c."""
    q = F.q
    hits = Counter()
    for x in range(q):
        if nonzero and x == 0:
            continue
        hits[F.sub(fx[x], F.mul(b, x))] += 1
    row = Counter(hits[c] for c in range(q))
    return dict(row)


def intersection_distribution(F, fx):
    total = Counter()
    for b in range(F.q):
        for i, n in multiplicity_row(F, fx, b).items():
            total[i] += n
    return dict(total)


def pasch_count(blocks):
    """Four blocks on six points, by testing every 4-subset of blocks."""
    blocks = [frozenset(b) for b in blocks]
    by_point = {}
    for b in blocks:
        for x in b:
            by_point.setdefault(x, []).append(b)
    count = 0
    # a Pasch configuration is determined by any two of its blocks, which meet
    seen = set()
    for b1, b2 in combinations(blocks, 2):
        if len(b1 & b2) != 1:
            continue
        for b3 in blocks:
            if b3 in (b1, b2) or b3 & b1 & b2:
                continue
            if len(b3 & b1) != 1 or len(b3 & b2) != 1:
                continue
            pts = b1 | b2 | b3
            for b4 in blocks:
                if b4 in (b1, b2, b3):
                    continue
                if b4 <= pts and all(len(b4 & b) == 1 for b in (b1, b2, b3)):
                    conf = frozenset((b1, b2, b3, b4))
                    if conf not in seen:
                        seen.add(conf)
                        count += 1
    return count


def projective_lines(F):
    """Every line of PG(2, q) as a frozenset of normalized point triples."""
    q = F.q
    pts = [(1, y, z) for y in range(q) for z in range(q)]
    pts += [(0, 1, z) for z in range(q)] + [(0, 0, 1)]
    lines = []
    for a, b, c in pts:
        on = frozenset(P for P in pts
                       if F.add(F.add(F.mul(a, P[0]), F.mul(b, P[1])), F.mul(c, P[2])) == 0)
        lines.append(on)
    return pts, lines


def normalize(F, P):
    for c in P:
        if c:
            s = F.inv(c)
            return tuple(F.mul(s, t) for t in P)
    raise ValueError


def primitive_roots(p):
    return [g for g in range(1, p)
            if len({pow(g, k, p) for k in range(1, p)}) == p - 1]
