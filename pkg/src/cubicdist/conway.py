"""Default moduli for GF(p^m).

Candidates are ordered the standard way for Conway polynomials: write the
monic polynomial as

    x^m - a_{m-1} x^{m-1} + a_{m-2} x^{m-2} - ... + (-1)^m a_0

and compare ``(a_{m-1}, ..., a_0)`` lexicographically.  The Conway
polynomial is the first primitive candidate whose root ``r`` satisfies, for
every proper divisor ``k`` of ``m``, that ``r^((p^m-1)/(p^k-1))`` is a root
of the Conway polynomial of degree ``k``.

``CONWAY`` is the embedded table; :func:`conway_polynomial` recomputes an
entry from scratch and is what the table was generated with.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import fpoly

# (p, m) -> coefficients, constant term first, monic.
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (3, 9): (1, 1, 2, 2, 0, 0, 0, 0, 0, 1),
    (3, 10): (2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1),
    (3, 11): (1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 12): (2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1),
    (3, 13): (1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (5, 5): (3, 4, 0, 0, 0, 1),
    (5, 6): (2, 0, 1, 4, 1, 0, 1),
    (5, 7): (3, 3, 0, 0, 0, 0, 0, 1),
    (5, 8): (2, 4, 3, 0, 1, 0, 0, 0, 1),
    (5, 9): (3, 1, 0, 2, 0, 0, 0, 0, 0, 1),
    (5, 10): (2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
    (7, 6): (3, 6, 4, 5, 1, 0, 1),
    (7, 7): (4, 6, 0, 0, 0, 0, 0, 1),
    (7, 8): (3, 2, 6, 4, 0, 0, 0, 0, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 7, 1),
    (11, 3): (9, 2, 0, 1),
    (11, 4): (2, 10, 8, 0, 1),
    (11, 5): (9, 0, 10, 0, 0, 1),
    (11, 6): (2, 7, 6, 4, 3, 0, 1),
    (13, 1): (11, 1),
    (13, 2): (2, 12, 1),
    (13, 3): (11, 2, 0, 1),
    (13, 4): (2, 12, 3, 0, 1),
    (13, 5): (11, 4, 0, 0, 0, 1),
    (13, 6): (2, 11, 11, 10, 0, 0, 1),
    (17, 1): (14, 1),
    (17, 2): (3, 16, 1),
    (17, 3): (14, 1, 0, 1),
    (17, 4): (3, 10, 7, 0, 1),
    (17, 5): (14, 1, 0, 0, 0, 1),
    (19, 1): (17, 1),
    (19, 2): (2, 18, 1),
    (19, 3): (17, 4, 0, 1),
    (19, 4): (2, 11, 2, 0, 1),
    (19, 5): (17, 5, 0, 0, 0, 1),
}

TABLE_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)
TABLE_MAX_DEGREE = 13


def _coefficients(a, p):
    """Map the signed-order key ``(a_{m-1}, ..., a_0)`` to a coefficient list."""
    m = len(a)
    coeffs = [0] * (m + 1)
    coeffs[m] = 1
    for pos, ai in enumerate(a):
        i = m - 1 - pos
        coeffs[i] = ai % p if (m - i) % 2 == 0 else (-ai) % p
    return coeffs


def candidates(p, m, constant=None):
    """Monic degree-``m`` polynomials in Conway order, nonzero constant term."""
    lows = [constant] if constant is not None else range(1, p)
    for head in itertools.product(range(p), repeat=m - 1):
        for a0 in lows:
            yield _coefficients(head + (a0,), p)


def _proper_maximal_divisors(m):
    return sorted({m // r for r in fpoly.prime_factors(m)}) if m > 1 else []


@lru_cache(maxsize=None)
def conway_polynomial(p, m):
    """Compute the Conway polynomial of GF(p^m) by search."""
    if not fpoly.is_prime(p):
        raise ValueError(f"{p} is not prime")
    g = fpoly.smallest_primitive_root(p)
    if m == 1:
        return ((-g) % p, 1)
    # the norm of the root is a_0 and must be the degree-1 root g
    subs = [(k, conway_polynomial(p, k)) for k in _proper_maximal_divisors(m)]
    q = p**m
    for cand in candidates(p, m, constant=g):
        if not fpoly.is_primitive(cand, p):
            continue
        ok = True
        for k, ck in subs:
            beta = fpoly.powmod([0, 1], (q - 1) // (p**k - 1), cand, p)
            if fpoly.evaluate(list(ck), beta, cand, p):
                ok = False
                break
        if ok:
            return tuple(cand)
    raise RuntimeError(f"no Conway polynomial found for ({p}, {m})")


def first_primitive(p, m):
    """First primitive polynomial in Conway order, with no compatibility test."""
    for cand in candidates(p, m):
        if fpoly.is_primitive(cand, p):
            return tuple(cand)
    raise RuntimeError(f"no primitive polynomial of degree {m} over GF({p})")


def default_modulus(p, m):
    # the table covers every table-range field below the 2^24 size cap
    if (p, m) in CONWAY:
        return CONWAY[(p, m)]
    return first_primitive(p, m)
