"""Functions F_q -> F_q given as monomials, normalized cubics or dense polynomials."""

from __future__ import annotations

import numpy as np


class PolyFn:
    """Base class; subclasses implement ``_evaluate_all``."""

    kind = "abstract"

    def __init__(self, field):
        self.field = field
        self._values = None

    def values(self):
        """``f(x)`` for every element index ``x``, as a read-only array."""
        if self._values is None:
            v = np.asarray(self._evaluate_all(), dtype=np.int64)
            v.flags.writeable = False
            self._values = v
        return self._values

    def __call__(self, x):
        v = self.values()[x]
        return int(v) if np.ndim(v) == 0 else v

    def is_permutation(self):
        return np.unique(self.values()).size == self.field.q

    def inverse(self):
        """Compositional inverse, by inverting the value table."""
        if not self.is_permutation():
            raise ValueError(f"{self.label()} is not a permutation of GF({self.field.q})")
        table = np.empty(self.field.q, dtype=np.int64)
        table[self.values()] = np.arange(self.field.q)
        return Tabulated(self.field, table, label=f"inverse({self.label()})")

    def same_function(self, other):
        return self.field == other.field and np.array_equal(self.values(), other.values())

    def degree(self):
        """Degree of the reduced polynomial (exponents below q)."""
        return _reduced_degree(self.field, self.dense_coefficients())

    def dense_coefficients(self):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError

    def label(self):
        raise NotImplementedError

    def __repr__(self):
        return f"<{self.label()} over GF({self.field.q})>"


class Monomial(PolyFn):
    """``x^d``; the exponent is kept as given, so ``x^(q-1)`` differs from ``x^0``."""

    kind = "monomial"

    def __init__(self, field, d):
        if d < 0:
            raise ValueError("monomial exponent must be >= 0")
        super().__init__(field)
        self.d = int(d)

    def _evaluate_all(self):
        return self.field.pow(self.field.elements(), self.d)

    def degree(self):
        return self.d

    def dense_coefficients(self):
        return [0] * self.d + [1]

    def describe(self):
        return {"kind": "monomial", "d": self.d}

    def label(self):
        return f"monomial:{self.d}"


class Cubic(PolyFn):
    """``x^3 - a x^2``."""

    kind = "cubic"

    def __init__(self, field, a):
        super().__init__(field)
        self.a = int(a)
        if not 0 <= self.a < field.q:
            raise ValueError(f"coefficient {a} outside GF({field.q})")

    def _evaluate_all(self):
        F = self.field
        x = F.elements()
        x2 = F.mul(x, x)
        return F.sub(F.mul(x2, x), F.mul(self.a, x2))

    def dense_coefficients(self):
        return [0, 0, self.field.neg(self.a), 1]

    def describe(self):
        return {"kind": "cubic", "a": self.a}

    def label(self):
        return f"cubic:{self.a}"


class Dense(PolyFn):
    """``c_0 + c_1 x + ... + c_n x^n`` with coefficients given as element indices."""

    kind = "dense"

    def __init__(self, field, coeffs):
        super().__init__(field)
        coeffs = [int(c) for c in coeffs]
        if any(not 0 <= c < field.q for c in coeffs):
            raise ValueError(f"coefficients must lie in range({field.q})")
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs) if coeffs else (0,)

    def _evaluate_all(self):
        F = self.field
        x = F.elements()
        acc = np.full(F.q, self.coeffs[-1], dtype=np.int64)
        for c in reversed(self.coeffs[:-1]):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def dense_coefficients(self):
        return list(self.coeffs)

    def describe(self):
        return {"kind": "dense", "coeffs": list(self.coeffs)}

    def label(self):
        return "dense:" + ",".join(map(str, self.coeffs))


class Tabulated(PolyFn):
    """An arbitrary function given by its value table."""

    kind = "table"

    def __init__(self, field, table, label="table"):
        super().__init__(field)
        table = np.asarray(table, dtype=np.int64)
        if table.shape != (field.q,):
            raise ValueError("value table must have one entry per element")
        self._table = table
        self._label = label

    def _evaluate_all(self):
        return self._table.copy()

    def degree(self):
        return None

    def describe(self):
        return {"kind": "table", "label": self._label}

    def label(self):
        return self._label


def _reduced_degree(field, coeffs):
    """Fold exponents ``e >= q`` onto ``1 + (e - 1) mod (q - 1)``; returns -1 for zero."""
    q = field.q
    folded = {}
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        r = e if e < q else 1 + (e - 1) % (q - 1)
        folded[r] = field.add(folded.get(r, 0), int(c))
    nz = [e for e, c in folded.items() if c]
    return max(nz) if nz else -1


def parse_poly(field, text):
    """Parse ``monomial:d``, ``cubic:a`` or ``dense:c0,c1,...``."""
    kind, _, arg = text.partition(":")
    try:
        if kind == "monomial":
            return Monomial(field, int(arg))
        if kind == "cubic":
            return Cubic(field, int(arg))
        if kind == "dense":
            return Dense(field, [int(c) for c in arg.split(",")])
    except ValueError as exc:
        raise ValueError(f"malformed polynomial descriptor {text!r}: {exc}") from None
    raise ValueError(f"malformed polynomial descriptor {text!r}")
