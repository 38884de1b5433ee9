"""
Writes the delimited tables and their figures into one directory:

  counts.csv / counts.png          tree, forest and dual counts
  normal_forms.csv / normal_forms.png
  homology.csv / homology.png      chain dimensions and ranks per weight
  gram_<n>.csv / gram_<n>.png      pairing matrices
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from . import enumeration, homology, hopf, koszul  # noqa: E402
from .forests import enumerate_forests, render  # noqa: E402

STYLE = {
    "figure.dpi": 120,
    "font.size": 9,
    "axes.titlesize": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def counts_table(upto=10):
    t, f = enumeration.tree_counts(upto), enumeration.forest_counts(upto)
    dt, df = enumeration.dual_counts(upto)
    return [(n, t[n - 1], f[n - 1], dt[n - 1], df[n - 1]) for n in range(1, upto + 1)]


def plot_counts(rows, path):
    n = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(4.2, 3.0))
    for col, label, mk in ((1, "trees", "o"), (2, "forests", "s"),
                           (3, "dual trees", "^"), (4, "dual forests", "v")):
        ax.semilogy(n, [r[col] for r in rows], marker=mk, ms=3, lw=1, label=label)
    ax.set_xlabel("degree n")
    ax.set_ylabel("count")
    ax.grid(alpha=0.25, lw=0.5)
    ax.legend(frameon=False)
    _save(fig, path)


def normal_form_table(upto=7):
    names = sorted(koszul.SYSTEMS)
    rows = []
    for n in range(2, upto + 1):
        rows.append([n] + [koszul.count_normal_forms(n, s) for s in names])
    return names, rows


def plot_normal_forms(names, rows, path, upto=7):
    fig, ax = plt.subplots(figsize=(4.2, 3.0))
    n = [r[0] for r in rows]
    for j, s in enumerate(names):
        ax.semilogy(n, [r[j + 1] for r in rows], marker="o", ms=3, lw=1, label=s)
    f = enumeration.forest_counts(upto)
    _, df = enumeration.dual_counts(upto)
    ax.semilogy(n, [f[k - 1] for k in n], ls=":", color="k", lw=0.8, label="forests")
    ax.semilogy(n, [df[k - 1] for k in n], ls="--", color="k", lw=0.8, label="dual forests")
    ax.set_xlabel("arity")
    ax.set_ylabel("normal monomials")
    ax.legend(frameon=False, ncol=2)
    _save(fig, path)


def homology_table(max_weight=4):
    rows = []
    for w in range(1, max_weight + 1):
        r = homology.homology_dims(w, bound=max(max_weight, homology.WEIGHT_BOUND))
        for c in r["components"]:
            rows.append((w, c["n"], c["arity"], c["dim_chain"], c["rank_d_out"],
                         c["rank_d_in"], c["dim_homology"]))
    return rows


def plot_homology(rows, path):
    fig, ax = plt.subplots(figsize=(4.2, 3.0))
    weights = sorted({r[0] for r in rows})
    for w in weights:
        sub = [r for r in rows if r[0] == w]
        ax.plot([r[2] for r in sub], [r[3] for r in sub], marker="o", ms=3, lw=1,
                label="weight %d" % w)
        for r in sub:
            if r[6]:
                ax.annotate("H=%d" % r[6], (r[2], r[3]), fontsize=7,
                            xytext=(3, 3), textcoords="offset points")
    ax.set_yscale("log")
    ax.set_xlabel("arity of chain component")
    ax.set_ylabel("dimension")
    ax.legend(frameon=False)
    _save(fig, path)


def plot_gram(names, m, path):
    size = max(2.5, 0.32 * len(names) + 1.2)
    fig, ax = plt.subplots(figsize=(size, size))
    vmax = max(1, max(abs(v) for row in m for v in row))
    ax.imshow(m, cmap="RdBu_r", vmin=-vmax, vmax=vmax)
    for i, row in enumerate(m):
        for j, v in enumerate(row):
            if v:
                ax.text(j, i, str(v), ha="center", va="center", fontsize=7)
    ax.set_xticks(range(len(names)))
    ax.set_yticks(range(len(names)))
    ax.set_xticklabels(names, rotation=90, fontsize=6)
    ax.set_yticklabels(names, fontsize=6)
    _save(fig, path)


def write_report(out, max_degree=3, max_weight=4):
    os.makedirs(out, exist_ok=True)
    files = []

    def path(name):
        p = os.path.join(out, name)
        files.append(p)
        return p

    with plt.rc_context(STYLE):
        rows = counts_table()
        _write_csv(path("counts.csv"), ["n", "trees", "forests", "dual_trees",
                                        "dual_forests"], rows)
        plot_counts(rows, path("counts.png"))

        names, nf = normal_form_table()
        _write_csv(path("normal_forms.csv"), ["arity"] + names, nf)
        plot_normal_forms(names, nf, path("normal_forms.png"))

        hrows = homology_table(max_weight)
        _write_csv(path("homology.csv"), ["weight", "n", "arity", "dim_chain",
                                          "rank_out", "rank_in", "dim_homology"], hrows)
        plot_homology(hrows, path("homology.png"))

        for n in range(1, max_degree + 1):
            basis = enumerate_forests(n)
            labels = [render(f) for f in basis]
            m = hopf.gram_matrix(n)
            _write_csv(path("gram_%d.csv" % n), [""] + labels,
                       [[labels[i]] + row for i, row in enumerate(m)])
            plot_gram(labels, m, path("gram_%d.png" % n))
    return files
