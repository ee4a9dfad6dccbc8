"""Table-based arithmetic in GF(p^m).

Elements are integers in ``range(q)``: the coordinate vector of an element in
the polynomial basis ``1, x, ..., x^(m-1)`` read as a base-p number.  So 0 is
zero, 1 is one, and the prime subfield is ``range(p)``.

Every arithmetic method of :class:`FieldSpec` accepts either Python ints or
numpy integer arrays (any shape, broadcasting as numpy does).  The int path is
kept separate because it sits inside per-element loops.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

import numpy as np

from . import conway, fpoly

MAX_FIELD_ORDER = 1 << 24
_ADD_TABLE_LIMIT = 1024
_BLOCK = 1024


class FieldError(ValueError):
    pass


class ReducibleModulusError(FieldError):
    pass


class NonPrimitiveModulusError(FieldError):
    pass


def _companion(modulus, p):
    m = len(modulus) - 1
    c = np.zeros((m, m), dtype=np.int64)
    for i in range(m - 1):
        c[i, i + 1] = 1
    c[m - 1, :] = [(-x) % p for x in modulus[:m]]
    return c


def _matpow(a, e, p):
    out = np.eye(a.shape[0], dtype=np.int64)
    while e:
        if e & 1:
            out = out @ a % p
        a = a @ a % p
        e >>= 1
    return out


def _power_coordinates(modulus, p, count):
    """Coordinates of x^0, ..., x^(count-1) modulo ``modulus``, one per row."""
    m = len(modulus) - 1
    c = _companion(modulus, p)
    block = min(count, _BLOCK)
    rows = np.zeros((block, m), dtype=np.int64)
    rows[0, 0] = 1
    for i in range(1, block):
        rows[i] = rows[i - 1] @ c % p
    out = [rows]
    step = _matpow(c, block, p)
    done = block
    while done < count:
        rows = rows @ step % p
        out.append(rows)
        done += block
    return np.concatenate(out)[:count]


class FieldSpec:
    """GF(p^m) with log/exp tables for a fixed primitive element ``alpha``.

    ``alpha`` is the residue class of ``x`` modulo ``modulus``, which must be a
    primitive polynomial.  Instances are immutable and should be obtained
    through :func:`build_field`.
    """

    def __init__(self, p, m, modulus):
        self.p = p
        self.m = m
        self.q = q = p**m
        self.modulus = tuple(modulus)
        self.powers = np.array([p**j for j in range(m)], dtype=np.int64)

        coords = _power_coordinates(self.modulus, p, q)
        idx = coords @ self.powers
        if idx[q - 1] != 1 or 0 in idx[: q - 1] or np.unique(idx[: q - 1]).size != q - 1:
            # x does not generate the multiplicative group; say why
            if not fpoly.is_irreducible(list(self.modulus), p):
                raise ReducibleModulusError(
                    f"modulus {self.modulus} is reducible over GF({p})")
            raise NonPrimitiveModulusError(
                f"modulus {self.modulus} is irreducible but not primitive over GF({p})")
        self.alpha = int(idx[1])
        exp = idx[: q - 1]
        self.exp_table = exp
        self._exp2 = np.concatenate([exp, exp])
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self.log_table = log

        digits = self.digits(np.arange(q))
        self.neg_table = ((-digits) % p) @ self.powers
        self._add = None
        if q <= _ADD_TABLE_LIMIT and p != 2 and m > 1:
            d = digits[:, None, :] + digits[None, :, :]
            self._add = ((d % p) @ self.powers).astype(np.int64)

        self._exp_l = self._exp2.tolist()
        self._log_l = log.tolist()
        self._neg_l = self.neg_table.tolist()
        self._add_l = self._add.tolist() if self._add is not None else None
        for arr in (self.exp_table, self._exp2, self.log_table, self.neg_table):
            arr.flags.writeable = False

    # -- representation -------------------------------------------------
    def __repr__(self):
        return f"FieldSpec(GF({self.p}^{self.m}), modulus={self.modulus})"

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.p == other.p and self.m == other.m
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __reduce__(self):
        return (build_field, (self.p, self.m, self.modulus))

    def describe(self):
        """Serialized form ``p,m,c0,c1,...,cm``."""
        return ",".join(str(x) for x in (self.p, self.m) + self.modulus)

    def digits(self, a):
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self.powers) % self.p

    def elements(self):
        return np.arange(self.q, dtype=np.int64)

    def nonzero(self):
        return np.arange(1, self.q, dtype=np.int64)

    def __call__(self, index):
        return FieldElem(self, index)

    def from_int(self, n):
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    # -- arithmetic -----------------------------------------------------
    def add(self, a, b):
        p = self.p
        if type(a) is int and type(b) is int:
            if p == 2:
                return a ^ b
            if self.m == 1:
                return (a + b) % p
            if self._add_l is not None:
                return self._add_l[a][b]
            out, w = 0, 1
            for _ in range(self.m):
                out += ((a % p + b % p) % p) * w
                a //= p
                b //= p
                w *= p
            return out
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        if self._add is not None:
            return self._add[a, b]
        return (((self.digits(a) + self.digits(b)) % p) @ self.powers)

    def neg(self, a):
        if type(a) is int:
            return self._neg_l[a]
        return self.neg_table[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if type(a) is int and type(b) is int:
            if a == 0 or b == 0:
                return 0
            return self._exp_l[self._log_l[a] + self._log_l[b]]
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        r = self._exp2[self.log_table[a] + self.log_table[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def inv(self, a):
        if type(a) is int:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return self._exp_l[(self.q - 1 - self._log_l[a]) % (self.q - 1)]
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        return self.exp_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        """``a**e``; negative ``e`` needs ``a != 0``; ``0**0 == 1``."""
        n = self.q - 1
        if type(a) is int:
            if a == 0:
                if e < 0:
                    raise ZeroDivisionError("negative power of zero")
                return 1 if e == 0 else 0
            return self._exp_l[self._log_l[a] * e % n]
        a = np.asarray(a, dtype=np.int64)
        if e < 0 and np.any(a == 0):
            raise ZeroDivisionError("negative power of zero")
        r = self.exp_table[(self.log_table[a] * (e % n)) % n]
        return np.where(a == 0, 1 if e == 0 else 0, r)

    def frobenius(self, a):
        return self.pow(a, self.p)

    def trace(self, a):
        """Absolute trace ``a + a^p + ... + a^(p^(m-1))``, an element of ``range(p)``."""
        t = y = a
        for _ in range(self.m - 1):
            y = self.frobenius(y)
            t = self.add(t, y)
        return t

    # -- multiplicative structure ---------------------------------------
    def log(self, a):
        if type(a) is int:
            if a == 0:
                raise ValueError("log of zero")
            return self._log_l[a]
        return self.log_table[np.asarray(a, dtype=np.int64)]

    def is_square(self, a):
        """Nonzero square test (odd q)."""
        return a != 0 and self._log_l[a] % 2 == 0

    def order(self, a):
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        return n // gcd(n, self._log_l[a])


class FieldElem:
    """An element of a :class:`FieldSpec`, with the usual operators."""

    __slots__ = ("field", "index")

    def __init__(self, field, index):
        index = int(index)
        if not 0 <= index < field.q:
            raise ValueError(f"index {index} out of range for GF({field.q})")
        self.field = field
        self.index = index

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.index
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def _wrap(self, i):
        return FieldElem(self.field, i)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.index, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.index, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.index))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.index, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.index, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.index))

    def __neg__(self):
        return self._wrap(self.field.neg(self.index))

    def __pow__(self, e):
        return self._wrap(self.field.pow(self.index, int(e)))

    def inverse(self):
        return self._wrap(self.field.inv(self.index))

    def trace(self):
        return self._wrap(self.field.trace(self.index))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.index == other.index
        if isinstance(other, int):
            return self.index == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.index))

    def __int__(self):
        return self.index

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        return f"GF({self.field.q})[{self.index}]"


@lru_cache(maxsize=64)
def _build(p, m, modulus):
    return FieldSpec(p, m, modulus)


def build_field(p, m=1, modulus=None):
    """Construct GF(p^m).

    Without ``modulus`` the Conway polynomial is used where tabulated,
    otherwise the first primitive polynomial in Conway order.
    """
    if not fpoly.is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_FIELD_ORDER:
        raise FieldError(f"GF({p}^{m}) exceeds the table limit {MAX_FIELD_ORDER}")
    if modulus is None:
        modulus = conway.default_modulus(p, m)
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise FieldError(f"modulus {modulus} is not monic of degree {m}")
    if any(not 0 <= c < p for c in modulus):
        raise FieldError(f"modulus coefficients must lie in range({p})")
    return _build(p, m, modulus)


def parse_modulus(text):
    return tuple(int(c) for c in text.split(","))


def parse_field(text):
    """Inverse of :meth:`FieldSpec.describe`."""
    parts = [int(c) for c in text.split(",")]
    if len(parts) < 2:
        raise FieldError(f"bad field description {text!r}")
    p, m = parts[:2]
    return build_field(p, m, parts[2:] or None)


class CyclotomicClassifier:
    """Cyclotomic classes ``C_i = alpha^i * (nonzero N-th powers)``."""

    def __init__(self, spec, n):
        if n < 1 or (spec.q - 1) % n:
            raise ValueError(f"N={n} does not divide q-1={spec.q - 1}")
        self.spec = spec
        self.N = n

    def class_of(self, x):
        if type(x) is int and x == 0:
            raise ValueError("zero lies in no cyclotomic class")
        return self.spec.log(x) % self.N

    def members(self, i):
        return np.sort(self.spec.exp_table[i % self.N :: self.N])


def cyclotomic_class(spec, x, n):
    return CyclotomicClassifier(spec, n).class_of(x)


def cyclotomic_number_formula(q, i, j):
    """Order-2 cyclotomic numbers ``(i, j)_q`` in closed form (odd q)."""
    if q % 4 == 1:
        return (q - 5) // 4 if (i, j) == (0, 0) else (q - 1) // 4
    return (q + 1) // 4 if (i, j) == (0, 1) else (q - 3) // 4


def cyclotomic_number(spec, i, j):
    """``|(1 + C_i) ∩ C_j|`` for the order-2 classes, by enumeration.

    The count is checked against :func:`cyclotomic_number_formula`.
    """
    if spec.p == 2:
        raise ValueError("order-2 cyclotomic numbers need odd q")
    xs = spec.nonzero()
    xs = xs[spec.log_table[xs] % 2 == i]
    ys = spec.add(1, xs)
    ys = ys[ys != 0]
    count = int(np.count_nonzero(spec.log_table[ys] % 2 == j))
    expected = cyclotomic_number_formula(spec.q, i, j)
    if count != expected:
        raise AssertionError(f"cyclotomic number ({i},{j}) of GF({spec.q}): "
                             f"enumerated {count}, closed form {expected}")
    return count


def prime_powers(limit, start=2):
    """All prime powers ``q`` with ``start <= q <= limit`` as ``(q, p, m)``."""
    out = []
    for q in range(start, limit + 1):
        fs = fpoly.prime_factors(q)
        if len(fs) == 1:
            p = fs[0]
            m = round(np.log(q) / np.log(p))
            while p**m < q:
                m += 1
            while p**m > q:
                m -= 1
            out.append((q, p, m))
    return out
