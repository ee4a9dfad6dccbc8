"""Stable JSON and CSV rendering.

Dictionaries are emitted in insertion order (never re-sorted), and every
count map is built with ascending numeric keys, so identical inputs give
byte-identical files.
"""

import csv
import io
import json

from . import __version__

TOOLKIT = "cubicdist"


def envelope(kind, spec, **payload):
    out = {"toolkit": TOOLKIT, "version": __version__, "kind": kind,
           "field": spec.describe() if spec is not None else None}
    out.update(payload)
    return out


def _default(o):
    if hasattr(o, "as_dict"):
        return o.as_dict()
    if hasattr(o, "tolist"):
        return o.tolist()
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def to_json(obj):
    return json.dumps(obj, indent=2, default=_default) + "\n"


def _header(spec):
    return [f"# {TOOLKIT} {__version__}", f"# field {spec.describe()}"]


def nonhit_csv(spec, entries):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d", "v0"])
    for e in entries:
        w.writerow([";".join(map(str, e.exponents)), e.v0])
    return "\n".join(_header(spec)) + "\n" + buf.getvalue()


def kakeya_csv(spec, sizes):
    """One Table-2-shaped row: q, sorted sizes, branch per size."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["q", "sizes", "provenance"])
    w.writerow([spec.q, " ".join(map(str, sizes)),
                "; ".join(f"{s}: {b}" for s, b in sizes.items())])
    return "\n".join(_header(spec)) + "\n" + buf.getvalue()


def write(text, path=None, stream=None):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stream.write(text)
