"""Lengths of the D-modules generated by f^{-alpha}.

The composition-series length is

    length = nu_tilde + r_f * [alpha is a positive integer] + 1,

where nu_tilde counts saturated classes congruent to alpha that are
born by degree alpha, and r_f is the branch count of the zero fibre.
Three computation paths cover the inputs:

* weighted homogeneous (no perturbation): nu_tilde is the cumulative
  coset multiplicity sum_{j >= 0} n_{f, alpha - j} of the spectrum;
* single-monomial perturbation: each class is born at
  alpha_tilde(nu) - r(nu) with the combinatorial shift r, so nu_tilde
  counts box classes with birth degree <= alpha in the coset of alpha;
* anything else: the expansion engine's saturation rank profile.

The single-monomial count is a derived formula, so `validate_paths`
cross-checks it against the other two and refuses to guess if they
ever disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .model import (
    OracleDisagreementError,
    PathUnavailableError,
    SWHSingularity,
)
from .spectrum import SpectrumSeries, spectrum
from . import shifts as _shifts

ENGINE_AUTO_CAP = 512


@dataclass(frozen=True)
class LengthReport:
    alpha: Fraction
    nu_tilde: int
    branch_count: int
    delta_tilde: int
    length: int
    provenance: str

    def to_json_dict(self) -> dict:
        from .model import rational_to_string

        return {
            "alpha": rational_to_string(self.alpha),
            "nu_tilde": self.nu_tilde,
            "branch_count": self.branch_count,
            "delta_tilde": self.delta_tilde,
            "length": self.length,
            "provenance": self.provenance,
        }


def branch_count(s: SWHSingularity, override: int | None = None) -> int:
    """r_f: 1 for n >= 3, gcd(e1, e2) for plane curves.

    The perturbed germ inherits the count from the principal part (the
    deformation is mu-constant); pass `override` to assert a different
    topology by hand.
    """
    if override is not None:
        if override < 1:
            raise ValueError("branch count must be positive")
        return override
    return s.branch_count


def delta_tilde(alpha: Fraction) -> int:
    alpha = Fraction(alpha)
    return 1 if alpha.denominator == 1 and alpha > 0 else 0


def nu_tilde_wh(sp: SpectrumSeries, alpha: Fraction) -> int:
    """Unperturbed count: cumulative coset multiplicity at alpha."""
    return sp.coset_cumulative(Fraction(alpha))


def nu_tilde_monomial(s: SWHSingularity, alpha: Fraction) -> int:
    """Single-monomial count: classes whose shifted birth degree reaches alpha.

    #{nu in the box : alpha_tilde(nu) - r(nu) <= alpha, alpha - alpha_tilde(nu) integral}.
    """
    alpha = Fraction(alpha)
    if len(s.perturbation) != 1:
        raise PathUnavailableError(
            "single-monomial counting needs exactly one perturbation term; use the engine path"
        )
    count = 0
    for nu in s.box():
        at = s.unshifted_degree(nu)
        if (alpha - at).denominator != 1:
            continue
        if at <= alpha or at - _shifts.shift(s, nu) <= alpha:
            count += 1
    return count


def _nu_tilde_engine(s: SWHSingularity, alpha: Fraction, engine) -> int:
    return engine.nu_tilde(Fraction(alpha))


def length(
    s: SWHSingularity,
    alpha: Fraction,
    engine: str | object = "auto",
    branch_override: int | None = None,
) -> LengthReport:
    """Length of the module generated by f^{-alpha}: nu_tilde + r_f*delta + 1.

    `engine` controls the multi-monomial path: "auto" builds an
    expansion engine when needed (desk-scale inputs only), "off" raises
    instead, and a prebuilt GaussManinEngine instance is used directly.
    """
    alpha = Fraction(alpha)
    rf = branch_count(s, branch_override)
    if s.is_weighted_homogeneous:
        nt = nu_tilde_wh(spectrum(s), alpha)
        prov = "weighted-homogeneous"
    elif len(s.perturbation) == 1:
        nt = nu_tilde_monomial(s, alpha)
        prov = "single-monomial"
    else:
        eng = _resolve_engine(s, engine)
        nt = _nu_tilde_engine(s, alpha, eng)
        prov = "engine"
    d = delta_tilde(alpha)
    return LengthReport(
        alpha=alpha,
        nu_tilde=nt,
        branch_count=rf,
        delta_tilde=d,
        length=nt + rf * d + 1,
        provenance=prov,
    )


def _resolve_engine(s: SWHSingularity, engine):
    if engine == "off":
        raise PathUnavailableError(
            "multi-monomial perturbation: nu_tilde needs the expansion engine"
        )
    if engine == "auto":
        if s.milnor_number > ENGINE_AUTO_CAP:
            raise PathUnavailableError(
                f"multi-monomial perturbation with {s.milnor_number} classes "
                "exceeds the automatic engine cap"
            )
        from .engine import GaussManinEngine

        return GaussManinEngine(s)
    return engine


def quotient_length(
    s: SWHSingularity,
    alpha: Fraction,
    engine: str | object = "auto",
    branch_override: int | None = None,
) -> int:
    """Length of the quotient by the next module: length(alpha) - length(alpha - 1).

    In the weighted homogeneous case this equals
    r_f * [alpha == 1] + n_{f, alpha}.
    """
    alpha = Fraction(alpha)
    hi = length(s, alpha, engine, branch_override)
    lo = length(s, alpha - 1, engine, branch_override)
    return hi.length - lo.length


def length_cor41(
    s: SWHSingularity,
    beta: Fraction,
    k: int,
    engine: str | object = "auto",
    branch_override: int | None = None,
) -> LengthReport:
    """Length for the exponent beta - 1 - k with beta in [0, 1): equals
    length at alpha = 1 + k - beta; k < 0 always gives 1."""
    beta = Fraction(beta)
    if not 0 <= beta < 1:
        raise PathUnavailableError(f"beta must lie in [0, 1), got {beta}")
    if k < 0:
        return LengthReport(
            alpha=1 + k - beta,
            nu_tilde=0,
            branch_count=branch_count(s, branch_override),
            delta_tilde=0,
            length=1,
            provenance="negative-power",
        )
    return length(s, 1 + k - beta, engine, branch_override)


def length_table(
    s: SWHSingularity,
    alpha_min: Fraction,
    alpha_max: Fraction,
    engine: str | object = "auto",
    branch_override: int | None = None,
) -> list[LengthReport]:
    """Reports at every rational in the spectral integer-translation cosets
    within [alpha_min, alpha_max], sorted by alpha."""
    alpha_min = Fraction(alpha_min)
    alpha_max = Fraction(alpha_max)
    if alpha_max < alpha_min:
        raise PathUnavailableError("empty range")
    residues = sorted({a % 1 for a, _ in spectrum(s).entries()})
    alphas = []
    for res in residues:
        a = res + math.ceil(alpha_min - res)
        while a <= alpha_max:
            if a >= alpha_min:
                alphas.append(a)
            a += 1
    return [
        length(s, a, engine, branch_override) for a in sorted(alphas)
    ]


def validate_paths(
    s: SWHSingularity, alpha: Fraction, engine: str | object = "auto"
) -> int:
    """Compute nu_tilde by every applicable path; raise on any disagreement."""
    alpha = Fraction(alpha)
    values: dict[str, int] = {}
    if s.is_weighted_homogeneous:
        values["weighted-homogeneous"] = nu_tilde_wh(spectrum(s), alpha)
        unperturbed_shift_view = sum(
            1
            for nu in s.box()
            if (alpha - s.unshifted_degree(nu)).denominator == 1
            and s.unshifted_degree(nu) <= alpha
        )
        values["unshifted-count"] = unperturbed_shift_view
    if len(s.perturbation) == 1:
        values["single-monomial"] = nu_tilde_monomial(s, alpha)
    if not s.is_weighted_homogeneous and s.milnor_number <= ENGINE_AUTO_CAP:
        values["engine"] = _nu_tilde_engine(s, alpha, _resolve_engine(s, engine))
    if not values:
        raise PathUnavailableError("no nu_tilde path applies to this input")
    if len(set(values.values())) > 1:
        raise OracleDisagreementError(
            f"nu_tilde paths disagree at alpha={alpha}: {values}"
        )
    return next(iter(values.values()))
