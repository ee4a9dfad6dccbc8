"""Size budgets for the exhaustive computations.

Setting ``CUBICDIST_MAX_Q`` in the environment replaces every default cap.
"""

import os

ENV_VAR = "CUBICDIST_MAX_Q"

DEFAULTS = {
    "nonhit_table": 512,
    "plane": 512,
    "scan": 1 << 14,
    "oracle_confirm": 2048,
    "steiner": 2187,
    "verify_cubic": 1024,
}


class BudgetExceeded(ValueError):
    pass


_override = None


def set_override(limit):
    """Process-wide cap used in place of the environment and defaults (None clears it)."""
    global _override
    _override = None if limit is None else int(limit)


def budget(name):
    if _override is not None:
        return _override
    env = os.environ.get(ENV_VAR)
    if env:
        return int(env)
    return DEFAULTS[name]


def check_budget(name, q, limit=None):
    limit = budget(name) if limit is None else limit
    if q > limit:
        raise BudgetExceeded(f"q={q} exceeds the {name} budget of {limit} "
                             f"(raise it with {ENV_VAR})")
