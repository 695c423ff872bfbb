#!/usr/bin/env python3
"""Render the CSVs written by `cvdj figures` to PNG.

Inputs (all in DIR, default ./figures):
  fig2_sigma_<s>.csv    x,string,class,bold,abs_m     one curve per balanced string
  fig3_sigma_<s>.csv    x,density_AB,density_SB,density_C
  fig3_verticals.csv    sigma_bar,delta_AB,delta_SB,optimal
  fig4_momentum.csv     p,gaussian,tophat
  fig4_position.csv     x,density_gaussian,density_orthogonal
  fig4_windows.csv      encoding,delta
"""

import argparse
import csv
import glob
import os
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def read(path):
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


def column(rows, key):
    return [float(r[key]) for r in rows]


def fig2(d):
    paths = sorted(glob.glob(os.path.join(d, "fig2_sigma_*.csv")))
    if not paths:
        return
    fig, axes = plt.subplots(1, len(paths), figsize=(4 * len(paths), 3.5), squeeze=False)
    for ax, path in zip(axes[0], paths):
        curves = defaultdict(lambda: ([], [], "", False))
        for r in read(path):
            xs, ys, _, _ = curves[r["string"]]
            xs.append(float(r["x"]))
            ys.append(float(r["abs_m"]))
            curves[r["string"]] = (xs, ys, r["class"], r["bold"] == "1")
        for xs, ys, cls, bold in curves.values():
            if bold:
                ax.plot(xs, ys, lw=2, color="C0" if cls == "AB" else "C3", label=cls)
            else:
                ax.plot(xs, ys, lw=0.5, color="0.7")
        handles, labels = ax.get_legend_handles_labels()
        unique = dict(zip(labels, handles))
        ax.legend(unique.values(), unique.keys())
        ax.set_title(os.path.basename(path)[len("fig2_"):-4])
        ax.set_xlabel("x")
        ax.set_yscale("log")
        ax.set_ylabel("|M_z(x)|")
    fig.tight_layout()
    fig.savefig(os.path.join(d, "fig2.png"), dpi=150)


def fig3(d):
    verticals = os.path.join(d, "fig3_verticals.csv")
    if not os.path.exists(verticals):
        return
    lines = read(verticals)
    fig, axes = plt.subplots(1, len(lines), figsize=(4 * len(lines), 3.5), squeeze=False)
    for ax, v in zip(axes[0], lines):
        rows = read(os.path.join(d, f"fig3_sigma_{v['sigma_bar']}.csv"))
        x = column(rows, "x")
        for key, color in (("density_AB", "C0"), ("density_SB", "C3"), ("density_C", "k")):
            ax.plot(x, column(rows, key), color=color, label=key[len("density_"):])
        for key, color in (("delta_AB", "C0"), ("delta_SB", "C3")):
            for sign in (-1, 1):
                ax.axvline(sign * float(v[key]), color=color, ls="--", lw=0.8)
        title = f"sigma_bar={v['sigma_bar']}"
        ax.set_title(title + (" (optimal)" if v["optimal"] == "1" else ""))
        ax.legend()
    fig.tight_layout()
    fig.savefig(os.path.join(d, "fig3.png"), dpi=150)


def fig4(d):
    path = os.path.join(d, "fig4_momentum.csv")
    if not os.path.exists(path):
        return
    mom = read(path)
    pos = read(os.path.join(d, "fig4_position.csv"))
    windows = {r["encoding"]: float(r["delta"]) for r in read(os.path.join(d, "fig4_windows.csv"))}
    fig, (a, b) = plt.subplots(1, 2, figsize=(9, 3.5))
    p = column(mom, "p")
    a.plot(p, column(mom, "gaussian"), label="gaussian")
    a.plot(p, column(mom, "tophat"), label="tophat")
    a.set_xlabel("p")
    a.legend()
    x = column(pos, "x")
    b.plot(x, column(pos, "density_gaussian"), label="gaussian")
    b.plot(x, column(pos, "density_orthogonal"), label="orthogonal")
    for name, color in (("gaussian", "C0"), ("orthogonal", "C1")):
        if name in windows:
            for sign in (-1, 1):
                b.axvline(sign * windows[name], color=color, ls="--", lw=0.8)
    b.set_xlabel("x")
    b.legend()
    fig.tight_layout()
    fig.savefig(os.path.join(d, "fig4.png"), dpi=150)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("dir", nargs="?", default="figures")
    args = parser.parse_args()
    for render in (fig2, fig3, fig4):
        render(args.dir)


if __name__ == "__main__":
    main()
