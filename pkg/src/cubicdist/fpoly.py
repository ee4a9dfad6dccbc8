"""Polynomials over a prime field GF(p).

A polynomial a_0 + a_1 x + ... + a_n x^n is a list ``[a_0, ..., a_n]`` of
integers in ``range(p)`` with nonzero last entry; ``[]`` is the zero
polynomial.  Only what the field constructor needs lives here: products and
remainders, gcd, modular powers, an irreducibility test and a primitivity
test.
"""

from __future__ import annotations

from math import gcd


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def sub(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return trim([(x - y) % p for x, y in zip(a, b)])


def divmod_(a, b, p):
    """Quotient and remainder of ``a`` by nonzero ``b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = r[-1] * inv_lead % p
        shift = len(r) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        trim(r)
    return trim(q), r


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def mulmod(a, b, g, p):
    return mod(mul(a, b, p), g, p)


def powmod(a, e, g, p):
    """``a**e mod g`` by square and multiply."""
    result = [1]
    base = mod(a, g, p)
    while e:
        if e & 1:
            result = mulmod(result, base, g, p)
        base = mulmod(base, base, g, p)
        e >>= 1
    return result


def pgcd(a, b, p):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def evaluate(h, x, g, p):
    """Evaluate ``h`` (coefficients in GF(p)) at the residue ``x mod g``."""
    acc = []
    for c in reversed(h):
        acc = mulmod(acc, x, g, p)
        if c:
            acc = sub(acc, [(-c) % p], p)
    return acc


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_prime(n):
    if n < 2:
        return False
    return prime_factors(n) == [n]


def is_irreducible(g, p):
    """Ben-Or test: ``g`` (degree m >= 1) is irreducible over GF(p)."""
    m = len(g) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(m // 2):
        xp = powmod(xp, p, g, p)
        if pgcd(g, sub(xp, x, p), p) != [1]:
            return False
    return True


def root_order_is_maximal(g, p):
    """True when ``x`` has multiplicative order exactly ``p**m - 1`` mod ``g``.

    Meaningful only for irreducible ``g``.
    """
    m = len(g) - 1
    n = p**m - 1
    x = [0, 1]
    if powmod(x, n, g, p) != [1]:
        return False
    return all(powmod(x, n // r, g, p) != [1] for r in prime_factors(n))


def is_primitive(g, p):
    if g[0] % p == 0:
        return False
    return is_irreducible(g, p) and root_order_is_maximal(g, p)


def smallest_primitive_root(p):
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in factors):
            return g
    raise ValueError(f"no primitive root mod {p}")


def coprime(a, b):
    return gcd(a, b) == 1
