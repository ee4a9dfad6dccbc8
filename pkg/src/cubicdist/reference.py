"""Known non-hitting indices ``v_0(x^d)`` for q <= 16.

Keys are tuples of exponents grouped with their inverse modulo q - 1.  A
trailing marker records the status of the value: ``""`` previously known,
``"new"`` explained by the cubic closed forms, ``"open"`` unexplained.
"""

NONHIT = {
    2: [((1,), 1, "")],
    3: [((1,), 2, ""), ((2,), 3, "")],
    4: [((1,), 3, ""), ((2,), 6, ""), ((3,), 5, "")],
    5: [((1,), 4, ""), ((2,), 10, ""), ((3,), 8, ""), ((4,), 7, "")],
    7: [((1,), 6, ""), ((2,), 21, ""), ((3,), 16, ""), ((4,), 15, ""), ((5,), 18, ""),
        ((6,), 11, "")],
    8: [((1,), 7, ""), ((2, 4), 28, ""), ((3, 5), 21, ""), ((6,), 28, ""), ((7,), 13, "")],
    9: [((1,), 8, ""), ((2,), 36, ""), ((3,), 24, ""), ((4,), 30, ""), ((5,), 24, ""),
        ((6,), 28, "new"), ((7,), 32, ""), ((8,), 15, "")],
    11: [((1,), 10, ""), ((2,), 55, ""), ((3, 7), 40, "new"), ((4,), 45, "new"),
         ((5,), 38, ""), ((6,), 35, ""), ((8,), 45, "new"), ((9,), 50, ""), ((10,), 19, "")],
    13: [((1,), 12, ""), ((2,), 78, ""), ((3,), 56, "new"), ((4,), 57, "open"),
         ((5,), 60, "open"), ((6,), 58, ""), ((7,), 48, ""), ((8,), 69, "open"),
         ((9,), 56, "open"), ((10,), 54, "new"), ((11,), 72, ""), ((12,), 23, "")],
    16: [((1,), 15, ""), ((2, 8), 120, ""), ((3,), 85, ""), ((4,), 60, ""), ((5,), 102, ""),
         ((6,), 85, "open"), ((7, 13), 75, "new"), ((9,), 85, ""), ((10,), 87, "open"),
         ((11,), 90, "open"), ((12,), 70, "open"), ((14,), 120, ""), ((15,), 29, "")],
}


def nonhit_pairs(q):
    """``{exponents: v0}`` for a tabulated q."""
    return {e: v for e, v, _ in NONHIT[q]}
