"""Closed-form distributions for ``x^3 - a x^2`` and a few related monomials.

Each function returns the same sparse-count objects as the brute-force
oracles in :mod:`cubicdist.distributions`, so the two can be compared
with ``==``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .distributions import IntersectionDistribution, MultiplicityRow, _sparse


def _ints(values):
    out = []
    for v in values:
        if Fraction(v).denominator != 1:
            raise ArithmeticError(f"closed form produced a non-integer count {v}")
        out.append(int(v))
    return tuple(out)


def _sign_case(field):
    """For p > 3: ``("j", +-1)`` when q = 1 mod 3, else ``("k", +-1)``."""
    p, m = field.p, field.m
    if p % 12 == 1 or m % 2 == 0:
        return "j", 1
    if p % 12 == 7:
        return "j", -1
    if p % 12 == 5:
        return "k", 1
    return "k", -1


def cubic_branch(field, a, b):
    """Which row of the multiplicity table applies to ``x^3 - a x^2`` at slope b.

    Returns one of ``"zero"``, ``"square"``, ``"nonsquare"`` (p > 3 and p = 3
    with a = 0), ``"special"``/``"generic"`` (p = 2) or ``"shifted"`` (p = 3,
    a != 0).
    """
    F = field
    a, b = int(a), int(b)
    if F.p == 2:
        if a == 0:
            return "special" if b == 0 else "generic"
        return "special" if F.div(b, F.mul(a, a)) == 1 else "generic"
    if F.p == 3:
        if a != 0:
            return "shifted"
        t = b
    else:
        if a == 0:
            t = b
        else:
            third = F.inv(F.from_int(3))
            t = F.add(F.div(b, F.mul(a, a)), third)
    if t == 0:
        return "zero"
    return "square" if F.is_square(t) else "nonsquare"


@lru_cache(maxsize=256)
def cubic_row_counts(field, branch):
    """``(M_0, M_1, M_2, M_3)`` for a branch label of :func:`cubic_branch`."""
    return _ints(_row_counts(Fraction(field.q), field, branch))


def _row_counts(q, field, branch):
    p, m = field.p, field.m
    if p == 2:
        if m % 2:
            if branch == "special":
                return (0, q, 0, 0)
            return ((q + 1) / 3, q / 2 - 1, 1, (q - 2) / 6)
        if branch == "special":
            return (2 * (q - 1) / 3, 1, 0, (q - 1) / 3)
        return ((q - 1) / 3, q / 2, 1, (q - 4) / 6)
    if p == 3:
        if branch == "shifted":
            return (q / 3, (q - 1) / 2, 1, (q - 3) / 6)
        if branch == "square":
            return (2 * q / 3, 0, 0, q / 3)
        return (0, q, 0, 0)
    case, s = _sign_case(field)
    if case == "j":
        j = s
        if branch == "zero":
            return (2 * (q - 1) / 3, 1, 0, (q - 1) / 3)
        if branch == "square":
            return ((q - 1) / 3, (q - j) / 2, 1 + j, (q - 4 - 3 * j) / 6)
        return ((q - 1) / 3, (q + j) / 2, 1 - j, (q - 4 + 3 * j) / 6)
    k = s
    if branch == "zero":
        return (0, q, 0, 0)
    if branch == "square":
        return ((q + 1) / 3, (q - 2 + k) / 2, 1 - k, (q - 2 + 3 * k) / 6)
    return ((q + 1) / 3, (q - 2 - k) / 2, 1 + k, (q - 2 - 3 * k) / 6)


def closed_form_cubic_muldist(field, a, b) -> MultiplicityRow:
    """Multiplicity row of ``x^3 - a x^2`` at slope b, without enumeration."""
    return MultiplicityRow(int(b), _sparse(cubic_row_counts(field, cubic_branch(field, a, b))))


def closed_form_cubic_intdist(field, a) -> IntersectionDistribution:
    q = Fraction(field.q)
    if field.p != 3:
        v = ((q * q - 1) / 3, (q * q - q + 2) / 2, q - 1, (q * q - 3 * q + 2) / 6)
    elif int(a) == 0:
        v = (q * (q - 1) / 3, q * (q + 1) / 2, 0, q * (q - 1) / 6)
    else:
        v = (q * q / 3, q * (q - 1) / 2, q, q * (q - 3) / 6)
    return IntersectionDistribution.from_values(_ints(v))


def cubic_target(field) -> IntersectionDistribution:
    """The distribution shared by all ``x^3 - a x^2``, a = 0, over this field."""
    return closed_form_cubic_intdist(field, 0)


def related_monomial_cases(field):
    """``{d: case}`` for the exponents with a known closed form, d in [1, q-1]."""
    q, p, m = field.q, field.p, field.m
    out = {}

    def put(d, case):
        if 1 <= d <= q - 1:
            out.setdefault(d, case)

    if p == 2 and m % 2:
        put((q + 1) // 3, 1)
        put(q - 3, 1)
    elif p == 2:
        put(q - 3, 2)
    elif p == 3:
        put(2 * q // 3, 3)
        put(q - 3, 3)
    elif q % 3 == 1:
        put(q - 3, 4)
    else:
        put((q + 1) // 3, 5)
        put(q - 3, 5)
    return out


def closed_form_related_monomials(field, d) -> IntersectionDistribution:
    cases = related_monomial_cases(field)
    if d not in cases:
        raise ValueError(f"no closed form for x^{d} over GF({field.q}); "
                         f"covered exponents: {sorted(cases)}")
    q = Fraction(field.q)
    case = cases[d]
    if case == 1:
        v = ((q * q - 1) / 3, (q * q - q + 2) / 2, q - 1, (q - 1) * (q - 2) / 6)
    elif case == 2:
        v = ((q - 1) ** 2 / 3, (3 * q * q + 7 * q - 4) / 6, 0, (q - 1) * (q - 4) / 6,
             (q - 1) / 3)
    elif case == 3:
        v = ((2 * q + 3) * (q - 1) / 6, (q * q - 2 * q + 3) / 2, 3 * (q - 1) / 2,
             (q - 1) * (q - 3) / 6)
    elif case == 4:
        v = ((2 * q + 1) * (q - 1) / 6, (3 * q * q - 2 * q + 5) / 6, 3 * (q - 1) / 2,
             (q - 1) * (q - 7) / 6, (q - 1) / 3)
    else:
        v = ((2 * q + 5) * (q - 1) / 6, (q * q - 4 * q + 5) / 2, 5 * (q - 1) / 2,
             (q - 1) * (q - 5) / 6)
    return IntersectionDistribution.from_values(_ints(v))
