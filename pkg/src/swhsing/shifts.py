"""Saturation shifts of spectral numbers for single-monomial deformations.

For f = f1 + c x^a the class indexed by nu in the spectrum box may
acquire a strictly smaller degree in the saturated lattice; the drop
r(nu) is a nonnegative integer computed combinatorially:

    r(nu) = max(0, max { j - sum_i floor((nu'_i + j a_i)/e_i) })

over pairs (nu', j) with j >= 1 and nu' in the box congruent to
nu - j a componentwise.  For fixed j the congruence determines at most
one admissible nu' (a residue hitting 0 mod e_i has no box
representative), and pairs with j above a sound bound cannot win, so
the maximum is a finite scan.

The reduced Bernstein-Sato roots of f are -(alpha - r) over the
spectral numbers alpha with their shifts r; this module exposes that
root exponent set.  Multi-monomial perturbations are out of scope here
and are served by the expansion engine instead.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .model import (
    CutoffExhaustedError,
    Monomial,
    PathUnavailableError,
    SWHSingularity,
)

TABLE_CAP = 1_000_000


def _single_monomial(s: SWHSingularity) -> Monomial:
    if s.is_weighted_homogeneous:
        raise PathUnavailableError("no perturbation: every shift is zero")
    if len(s.perturbation) != 1:
        raise PathUnavailableError(
            "combinatorial shifts need a single-monomial perturbation; use the engine path"
        )
    return s.perturbation[0][0]


def truncation_bound(s: SWHSingularity) -> int:
    """Largest j that can still contribute a positive shift candidate.

    A candidate scores j - sum floor((nu'_i + j a_i)/e_i)
    <= j (1 - d(a)) + n, so past n / (d(a) - 1) all scores are <= 0.
    """
    a = _single_monomial(s)
    excess = s.unshifted_degree(a) - 1
    return max(1, math.ceil(Fraction(s.n) / excess))


def shift(s: SWHSingularity, nu: Monomial, j_bound: int | None = None) -> int:
    """Saturation shift r(nu) for nu in the spectrum box."""
    a = _single_monomial(s)
    e = s.exponents
    for v, ei in zip(nu, e, strict=True):
        if not 1 <= v <= ei - 1:
            raise PathUnavailableError(
                f"{nu} is not in the spectrum box of {e}"
            )
    if j_bound is None:
        j_bound = truncation_bound(s)
    best = 0
    for j in range(1, j_bound + 1):
        score = j
        for vi, ai, ei in zip(nu, a, e):
            res = (vi - j * ai) % ei
            if res == 0:
                score = None  # no box representative at this j
                break
            # nu'_i = res, and floor((res + j a_i)/e_i) = (res + j a_i - vi)/e_i
            score -= (res + j * ai - vi) // ei
        if score is not None and score > best:
            best = score
    return best


def shift_table(s: SWHSingularity, j_bound: int | None = None) -> dict[Monomial, int]:
    """r(nu) for every nu in the spectrum box."""
    if s.milnor_number > TABLE_CAP:
        raise CutoffExhaustedError(
            f"refusing to tabulate {s.milnor_number} shifts"
        )
    return {nu: shift(s, nu, j_bound) for nu in s.box()}


def root_exponents(s: SWHSingularity) -> set[Fraction]:
    """The set { alpha_tilde(nu) - r(nu) }; negated, these are the reduced
    Bernstein-Sato roots.  Weighted homogeneous inputs give the spectrum
    support itself."""
    if s.is_weighted_homogeneous:
        from .spectrum import spectrum

        return spectrum(s).support()
    table = shift_table(s)
    return {
        sum(Fraction(v, e) for v, e in zip(nu, s.exponents)) - r
        for nu, r in table.items()
    }


def shifted_entries(s: SWHSingularity) -> list[tuple[Monomial, Fraction, int]]:
    """(nu, alpha_tilde(nu), r(nu)) rows, sorted by degree then nu."""
    table = shift_table(s)
    rows = [
        (nu, sum(Fraction(v, e) for v, e in zip(nu, s.exponents)), r)
        for nu, r in table.items()
    ]
    rows.sort(key=lambda row: (row[1], row[0]))
    return rows
