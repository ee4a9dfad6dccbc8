"""Check suites: enumeration against every closed form, over one field or many.

Each suite returns a plain dict with a ``passed`` flag and enough detail to
locate a failure; nothing here raises on a mathematical mismatch.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from .classify import is_cubic_like, scan_all_d
from .conway import candidates
from .closed_forms import (closed_form_cubic_intdist, closed_form_related_monomials,
                           cubic_branch, cubic_row_counts, cubic_target,
                           related_monomial_cases)
from .distributions import (IntersectionDistribution, check_basic_equations, check_v0_bounds,
                            intersection_distribution, inverse_distribution_check,
                            monomial_nonhitting_table, multiplicity_matrix, random_dense)
from .field import build_field, prime_powers
from .fpoly import is_primitive
from .kakeya import cubic_kakeya_table, table_sizes
from .polyfn import Cubic, Monomial
from .reference import NONHIT
from .steiner import (build_sts, is_affine, is_linearized, isomorphic, maps_blocks,
                      pasch_count, shifted, validate_sts)

CUBIC_FIELDS = (4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 81, 121, 125, 243, 729)
_SHOW = 5


def _field(q):
    for qq, p, m in prime_powers(q, q):
        return build_field(p, m)
    raise ValueError(f"{q} is not a prime power")


def _section(cases, failures):
    return {"passed": not failures, "cases": cases, "failures": failures[:_SHOW],
            "failure_count": len(failures)}


def expected_cubic_matrix(spec, a):
    """Closed-form ``M[b, i]`` for ``x^3 - a x^2``, shaped like the enumeration."""
    q = spec.q
    out = np.zeros((q, q + 1), dtype=np.int64)
    for b in range(q):
        out[b, :4] = cubic_row_counts(spec, cubic_branch(spec, a, b))
    return out


def verify_cubic(spec, jobs=1):
    q = spec.q
    rows_bad, dist_bad = [], []
    for a in range(q):
        got = multiplicity_matrix(Cubic(spec, a), jobs=jobs)
        want = expected_cubic_matrix(spec, a)
        for b in np.flatnonzero((got != want).any(axis=1)):
            rows_bad.append({"a": a, "b": int(b), "oracle": got[b, :5].tolist(),
                             "formula": want[b, :5].tolist()})
        v = got.sum(axis=0)
        formula = closed_form_cubic_intdist(spec, a)
        if {i: int(c) for i, c in enumerate(v) if c} != formula.counts:
            dist_bad.append({"a": a, "oracle": v[:5].tolist(), "formula": formula.as_dict()})
    related_bad = []
    cases = related_monomial_cases(spec)
    for d in sorted(cases):
        o = intersection_distribution(Monomial(spec, d), jobs=jobs)
        c = closed_form_related_monomials(spec, d)
        if o != c:
            related_bad.append({"d": d, "case": cases[d], "oracle": o.as_dict(),
                                "formula": c.as_dict()})
    checks = {
        "multiplicity_rows": _section(q * q, rows_bad),
        "intersection_distribution": _section(q, dist_bad),
        "related_monomials": _section(len(cases), related_bad),
    }
    return {"q": q, "passed": all(c["passed"] for c in checks.values()), "checks": checks}


def verify_nonhit(spec, jobs=1):
    if spec.q not in NONHIT:
        return {"q": spec.q, "passed": True, "skipped": "no tabulated row"}
    got = {e.exponents: e.v0 for e in monomial_nonhitting_table(spec, jobs=jobs)}
    want = {e: v for e, v, _ in NONHIT[spec.q]}
    bad = [{"d": list(k), "table": want.get(k), "computed": got.get(k)}
           for k in sorted(set(got) | set(want)) if got.get(k) != want.get(k)]
    return {"q": spec.q, **_section(len(want), bad)}


def verify_filter(spec, jobs=1):
    target = cubic_target(spec)
    bad = []
    for d in range(1, spec.q):
        f_ok, _ = is_cubic_like(spec, d)
        o_ok = intersection_distribution(Monomial(spec, d)) == target
        if f_ok != o_ok:
            bad.append({"d": d, "filter": f_ok, "oracle": o_ok})
    scan = scan_all_d(spec, confirm=False, jobs=jobs, limit=spec.q)
    out = {"q": spec.q, **_section(spec.q - 1, bad)}
    out["hits"] = scan.exponents
    out["families_agree"] = scan.agreement
    out["missing"], out["extra"] = scan.missing, scan.extra
    return out


def verify_steiner(spec, rng, samples=3):
    """Design axioms and the three structural facts, for every cubic-like x^d."""
    q = spec.q
    failures = []
    systems = {}
    for d in range(1, q):
        if not is_cubic_like(spec, d)[0]:
            continue
        f = Monomial(spec, d)
        ts = build_sts(spec, f)
        systems[d] = ts
        if not validate_sts(ts).passed:
            failures.append({"d": d, "check": "validate"})
        for _ in range(samples):
            b, c = (int(x) for x in rng.integers(0, q, size=2))
            if build_sts(spec, shifted(f, b, c)) != ts:
                failures.append({"d": d, "check": "shift-invariance", "b": b, "c": c})
        if gcd(d, q - 1) == 1:
            inv = f.inverse()
            if not maps_blocks(ts, build_sts(spec, inv), f.values()):
                failures.append({"d": d, "check": "inverse-map"})
        if is_affine(ts, spec) != is_linearized(f):
            failures.append({"d": d, "check": "affine-iff-linearized"})
    out = {"q": q, **_section(len(systems), failures), "exponents": sorted(systems)}
    out["pasch"] = {d: pasch_count(ts) for d, ts in systems.items()}
    return out, systems


def verify_kakeya(spec):
    try:
        entries = cubic_kakeya_table(spec)
    except AssertionError as exc:
        return {"q": spec.q, "passed": False, "cases": 0, "failures": [str(exc)],
                "failure_count": 1}
    bad = [e.as_dict() for e in entries
           if e.computed["via_dual_count"] not in (None, e.computed["via_formula"])]
    out = {"q": spec.q, **_section(len(entries), bad)}
    out["sizes"] = list(table_sizes(entries))
    return out


def verify_bounds(spec):
    rows = []
    for a in (0, 1):
        r = check_v0_bounds(Cubic(spec, a)).as_dict()
        rows.append({"a": a, **r})
    return rows


def expected_tightness(spec, a):
    """``(lower_tight, upper_tight)`` predicted for ``x^3 - a x^2``; None when not predicted."""
    p, m = spec.p, spec.m
    if p == 3:
        return (True, False) if a else (False, True)
    if m % 2 and (p == 2 or p % 12 in (5, 11)):
        return True, False
    return None


def verify_properties(rng, max_q=49, polys=1000, perms=50):
    failures = []
    # two primitive moduli for GF(9)
    mods = [c for c in candidates(3, 2) if is_primitive(list(c), 3)][:2]
    F1, F2 = (build_field(3, 2, list(m)) for m in mods)
    for d in range(1, 9):
        if intersection_distribution(Monomial(F1, d)) != intersection_distribution(Monomial(F2, d)):
            failures.append({"check": "representation", "d": d})
    fields = [build_field(p, m) for q, p, m in prime_powers(max_q)]
    for _ in range(polys):
        F = fields[int(rng.integers(len(fields)))]
        f = random_dense(F, rng, max(1, min(F.q - 1, 8)))
        dist = IntersectionDistribution.from_values(multiplicity_matrix(f).sum(axis=0))
        if not check_basic_equations(dist, F.q).passed:
            failures.append({"check": "basic-equations", "poly": f.label(), "q": F.q})
    done = 0
    while done < perms:
        F = fields[int(rng.integers(len(fields)))]
        d = int(rng.integers(1, F.q))
        if gcd(d, F.q - 1) != 1:
            continue
        done += 1
        if not inverse_distribution_check(Monomial(F, d)):
            failures.append({"check": "inverse", "q": F.q, "d": d})
    return _section(8 + polys + perms, failures)


def verify_all(max_q=729, jobs=1, seed=0):
    """The full suite, restricted to fields with q <= max_q."""
    rng = np.random.default_rng(seed)
    report = {"max_q": max_q, "seed": seed, "sections": {}}
    sec = report["sections"]

    cubic = [verify_cubic(_field(q), jobs) for q in CUBIC_FIELDS if q <= max_q]
    sec["cubic_closed_forms"] = {"passed": all(r["passed"] for r in cubic), "fields": cubic}

    nonhit = [verify_nonhit(_field(q), jobs) for q in sorted(NONHIT) if q <= max_q]
    sec["nonhit_table"] = {"passed": all(r["passed"] for r in nonhit), "fields": nonhit}

    related = []
    for q, p, m in prime_powers(min(max_q, 729)):
        F = build_field(p, m)
        for d, case in sorted(related_monomial_cases(F).items()):
            ok = intersection_distribution(Monomial(F, d)) == closed_form_related_monomials(F, d)
            if not ok:
                related.append({"q": q, "d": d, "case": case})
    sec["related_monomials"] = {"passed": not related, "failures": related}

    filt = [verify_filter(build_field(p, m), jobs) for q, p, m in prime_powers(min(max_q, 243))]
    sec["classification_filter"] = {"passed": all(r["passed"] for r in filt),
                                    "fields": [{k: r[k] for k in ("q", "passed", "hits",
                                                                  "families_agree")}
                                               for r in filt]}

    stein = []
    for q in (9, 27):
        if q > max_q:
            continue
        F = _field(q)
        r, systems = verify_steiner(F, rng)
        if q == 27:
            v = isomorphic(systems[3], systems[11])
            r["x3_vs_x11"] = v.as_dict()
            r["passed"] = r["passed"] and v.decision == "non-isomorphic"
            w = isomorphic(systems[11], systems[19])
            r["x11_vs_x19"] = w.as_dict()
        stein.append(r)
    sec["steiner"] = {"passed": all(r["passed"] for r in stein), "fields": stein}

    kak = [verify_kakeya(build_field(p, m)) for q, p, m in prime_powers(min(max_q, 81))]
    sec["kakeya"] = {"passed": all(r["passed"] for r in kak), "fields": kak}

    bounds, bad = [], []
    for q in (8, 5, 11, 9, 27):
        if q > max_q:
            continue
        F = _field(q)
        for row in verify_bounds(F):
            want = expected_tightness(F, row["a"])
            row["q"] = q
            row["expected"] = want
            if want is not None and (row["lower_tight"], row["upper_tight"]) != want:
                bad.append(row)
            bounds.append(row)
    sec["bound_tightness"] = {"passed": not bad, "rows": bounds}

    sec["properties"] = verify_properties(rng, max_q=min(max_q, 49))
    report["passed"] = all(s["passed"] for s in sec.values())
    return report
