"""Figures for the table-producing commands, rendered off-screen to files."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def nonhit_figure(q, entries, target_v0, path):
    """``v_0(x^d)`` against d, with the x^3 value as a reference line."""
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ds, vs = [], []
    for e in entries:
        for d in e.exponents:
            ds.append(d)
            vs.append(e.v0)
    ax.bar(ds, vs, color="#4a78a8", width=0.8)
    ax.axhline(target_v0, color="#c0392b", lw=1, ls="--", label="v0(x^3)")
    ax.set_xlabel("d")
    ax.set_ylabel("non-hitting index")
    ax.set_title(f"v0(x^d) over GF({q})")
    ax.legend(loc="upper right", fontsize=8)
    return _save(fig, path)


def scan_figure(report, image_sizes, path):
    """Size of the g_d image for every d; filter hits highlighted."""
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ds = range(1, len(image_sizes) + 1)
    ax.plot(ds, image_sizes, ".", ms=2, color="#7f8c8d")
    hits = report.exponents
    ax.plot(hits, [image_sizes[d - 1] for d in hits], "o", ms=5, color="#c0392b",
            label="same distribution as x^3")
    ax.set_xlabel("d")
    ax.set_ylabel("|image of g_d|")
    ax.set_title(f"exponent scan over GF({report.q})")
    ax.legend(loc="lower right", fontsize=8)
    return _save(fig, path)


def kakeya_figure(q, sizes, known, path):
    """Sizes from x^3 - a x^2 against the list of previously known sizes."""
    fig, ax = plt.subplots(figsize=(7, 2.4))
    styles = {"known": ("#7f8c8d", "o"), "new": ("#2e86c1", "s"),
              "not constructed": ("#d35400", "x")}
    for status, (color, marker) in styles.items():
        xs = [s for s, st in known if st == status]
        if xs:
            ax.plot(xs, [0] * len(xs), marker, color=color, label=status, ls="")
    ax.plot(list(sizes), [1] * len(sizes), "D", color="#c0392b", label="x^3 - a x^2", ls="")
    ax.set_yticks([0, 1], ["table", "this run"])
    ax.set_ylim(-0.7, 1.7)
    ax.set_xlabel("|K|")
    ax.set_title(f"Kakeya sizes in PG(2,{q})")
    ax.legend(loc="upper left", fontsize=7, ncol=4)
    return _save(fig, path)
