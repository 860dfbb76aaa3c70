"""Executable sufficient conditions comparing lengths before and after perturbation.

Two checkable hypotheses relate the lengths for f = f1 + higher order
and for the principal part f1 at the same exponent alpha:

* condition (i): alpha < alpha_tilde_f + rho_f - 1.  Predicts equality
  of the two lengths.
* condition (ii) at level r >= 1: some monomial h with
  shifted_degree(h) = alpha - r*(rho_f - 1) keeps f_rho^r * h nonzero
  in the Milnor algebra (its class then sits in shifted degree
  alpha + r).  Predicts the perturbed length exceeds the unperturbed
  one; the special witness h = 1 at r = 1 sharpens this to "exceeds by
  exactly one".

Witness absence proves nothing: the strict inequality can hold with no
monomial witness, so callers must not read "no witness" as "equal".

`corollary1_witness` produces, for every Fermat-type principal part
x1^d + ... + xn^d with d > n >= 3, perturbation monomials of total
degrees 2d - n and 2d - n + 1 accepted by conditions (ii) and (i)
respectively at alpha = 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .milnor import class_nonzero_in_grV
from .model import (
    Monomial,
    PathUnavailableError,
    SWHSingularity,
    rational_to_string,
)


@dataclass(frozen=True)
class Condition1Report:
    """Outcome of the condition (i) bound check at a given alpha."""

    alpha: Fraction
    holds: bool
    bound: Fraction
    margin: Fraction  # bound - alpha; positive iff holds

    predicted = "equal"  # relation to the unperturbed length when holds

    def to_json_dict(self) -> dict:
        return {
            "kind": "condition-i",
            "alpha": rational_to_string(self.alpha),
            "holds": self.holds,
            "bound": rational_to_string(self.bound),
            "margin": rational_to_string(self.margin),
            "predicted": self.predicted if self.holds else None,
        }


@dataclass(frozen=True)
class Thm2Witness:
    """A monomial witness for condition (ii) (kind "equality-8" when h=1, r=1)."""

    kind: str  # "condition-ii" | "equality-8"
    alpha: Fraction
    r: int
    h: Monomial
    predicted: str  # "greater" (strict) | "plus-one" (exactly one more)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "alpha": rational_to_string(self.alpha),
            "r": self.r,
            "h": list(self.h),
            "predicted": self.predicted,
        }


def check_thm2_i(s: SWHSingularity, alpha: Fraction) -> Condition1Report:
    """Condition (i): alpha < alpha_tilde_f + rho_f - 1 (strict)."""
    alpha = Fraction(alpha)
    bound = s.minimal_exponent + s.rho - 1
    return Condition1Report(
        alpha=alpha, holds=alpha < bound, bound=bound, margin=bound - alpha
    )


def _lex_first_monomial_of_degree(
    s: SWHSingularity, caps: tuple[int, ...], target: Fraction
) -> Monomial | None:
    """Lexicographically first h with 0 <= h_i <= caps_i and
    shifted_degree(h) == target, or None.

    Meet-in-the-middle: heads are enumerated in lex order (itertools
    product of ascending ranges), tails are indexed by degree with the
    lex-least tail stored per degree, so the first completed tuple is
    the global lex minimum.
    """
    n = s.n
    e = s.exponents
    split = n // 2
    tail_best: dict[Fraction, tuple[int, ...]] = {}
    for tail in itertools.product(*(range(c + 1) for c in caps[split:])):
        deg = sum(
            (Fraction(hi + 1, ei) for hi, ei in zip(tail, e[split:])), Fraction(0)
        )
        cur = tail_best.get(deg)
        if cur is None or tail < cur:
            tail_best[deg] = tail
    for head in itertools.product(*(range(c + 1) for c in caps[:split])):
        deg = sum(
            (Fraction(hi + 1, ei) for hi, ei in zip(head, e[:split])), Fraction(0)
        )
        tail = tail_best.get(target - deg)
        if tail is not None:
            return head + tail
    return None


def check_thm2_ii(
    s: SWHSingularity, alpha: Fraction, r: int
) -> Thm2Witness | None:
    """Search for a condition (ii) witness at level r; None when there is none.

    Needs the minimal-degree perturbation part to be a single monomial;
    otherwise the graded algebra sees more than one correction term and
    a monomial search cannot decide nonvanishing.
    """
    alpha = Fraction(alpha)
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    minimal = s.minimal_part
    if len(minimal) != 1:
        raise PathUnavailableError(
            "minimal perturbation part is not a single monomial: engine required"
        )
    a, _ = minimal[0]
    target = alpha - r * (s.rho - 1)
    caps = tuple(ei - 2 - r * ai for ei, ai in zip(s.exponents, a))
    if any(c < 0 for c in caps):
        return None  # f_rho^r already leaves the Milnor box
    h = _lex_first_monomial_of_degree(s, caps, target)
    if h is None:
        return None
    product = tuple(hi + r * ai for hi, ai in zip(h, a))
    assert class_nonzero_in_grV(s, product)
    assert s.shifted_degree(product) == alpha + r
    if r == 1 and not any(h):
        return Thm2Witness(
            kind="equality-8", alpha=alpha, r=r, h=h, predicted="plus-one"
        )
    return Thm2Witness(
        kind="condition-ii", alpha=alpha, r=r, h=h, predicted="greater"
    )


def corollary1_witness(n: int, d: int) -> tuple[Monomial, Monomial]:
    """Perturbation monomials for x1^d + ... + xn^d, d > n >= 3.

    Returns (m_ii, m_i) of total degrees 2d - n and 2d - n + 1 with all
    exponents <= d - 2, so m_ii satisfies condition (ii) with r = 1 at
    alpha = 1 (witness h = 1) and m_i satisfies condition (i) at
    alpha = 1.  Such monomials always exist: 2d - n + 1 <= n(d - 2)
    whenever d > n >= 3.  Exponents are filled greedily left to right.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if d <= n:
        raise ValueError(f"need d > n, got d={d}, n={n}")

    def greedy(total: int) -> Monomial:
        cap = d - 2
        out = []
        for _ in range(n):
            take = min(cap, total)
            out.append(take)
            total -= take
        if total:
            raise ValueError(f"degree {total + sum(out)} does not fit the box")
        return tuple(out)

    return greedy(2 * d - n), greedy(2 * d - n + 1)
