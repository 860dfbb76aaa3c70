"""Optional matplotlib renderings of report data.

Everything in the library proper is exact; this module is the one
place rationals are converted to floats, at the plotting boundary.
All renderers write PNG files through the Agg backend and return the
paths written, so they work headless and never open a window.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .model import SWHSingularity
from .spectrum import MATERIALIZE_CAP, SpectrumSeries


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_spectrum(sp: SpectrumSeries, out_dir: str) -> str:
    """Stem plot of spectral multiplicities; integral classes only when
    the full support is too large to materialize."""
    plt = _pyplot()
    path = os.path.join(out_dir, "spectrum.png")
    fig, ax = plt.subplots(figsize=(8, 4))
    if sp.distinct_count <= MATERIALIZE_CAP:
        pairs = sp.entries()
        label = f"{sp.distinct_count} distinct classes"
    else:
        pairs = sorted(
            (Fraction(a), m) for a, m in sp.integral_multiplicities().items()
        )
        label = "integral classes only (support too large)"
    xs = [float(a) for a, _ in pairs]
    ys = [m for _, m in pairs]
    if xs:
        ax.stem(xs, ys, basefmt=" ")
    ax.axvline(sp.n / 2, color="gray", linestyle=":", label="symmetry center")
    ax.set_xlabel("exponent")
    ax.set_ylabel("multiplicity")
    ax.set_title(f"Spectrum, mu = {sp.mu} ({label})")
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_roots(
    s: SWHSingularity,
    rows: list[tuple[tuple[int, ...], Fraction, int]],
    out_dir: str,
) -> str:
    """Shifted versus unshifted exponents: one marker per box class."""
    plt = _pyplot()
    path = os.path.join(out_dir, "roots.png")
    fig, ax = plt.subplots(figsize=(8, 4))
    plain = [float(a) for _, a, r in rows if r == 0]
    moved_from = [float(a) for _, a, r in rows if r]
    moved_to = [float(a - r) for _, a, r in rows if r]
    ax.scatter(plain, [0] * len(plain), marker="o", label="unshifted")
    if moved_from:
        ax.scatter(moved_from, [0] * len(moved_from), marker="x", color="tab:red")
        ax.scatter(
            moved_to, [0] * len(moved_to), marker="o", color="tab:red",
            label="shifted",
        )
        for a, b in zip(moved_from, moved_to):
            ax.annotate(
                "", xy=(b, 0), xytext=(a, 0),
                arrowprops={"arrowstyle": "->", "color": "tab:red"},
            )
    ax.set_yticks([])
    ax.set_xlabel("root exponent (negate for the reduced root)")
    ax.set_title(f"Root exponents, {len(rows)} classes")
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_anchors(results, out_dir: str) -> str:
    """Horizontal pass/fail/skip bar for the verification battery."""
    plt = _pyplot()
    path = os.path.join(out_dir, "verify.png")
    colors = {"pass": "tab:green", "fail": "tab:red", "skip": "tab:gray"}
    names = [r.name for r in results]
    fig, ax = plt.subplots(figsize=(8, 0.4 * len(names) + 1.2))
    ax.barh(
        range(len(names)),
        [1] * len(names),
        color=[colors[r.status] for r in results],
    )
    ax.set_yticks(range(len(names)), names)
    ax.invert_yaxis()
    ax.set_xticks([])
    counts = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
    ax.set_title(f"Verification battery: {summary}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
