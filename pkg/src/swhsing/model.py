"""Core model for semi-weighted-homogeneous isolated hypersurface singularities.

The objects here describe germs f = f1 + higher-order terms, where the
principal part f1 is a sum of pure powers c_i * x_i^{e_i} (an isolated
singularity at the origin once every e_i >= 2) and every higher-order
term is a monomial of weighted degree strictly bigger than 1 for the
weights w_i = 1/e_i.  All arithmetic is exact: degrees, coefficients and
everything derived from them are `fractions.Fraction`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Iterator

Monomial = tuple[int, ...]


class ValidationError(ValueError):
    """Input data fails a model validity requirement."""


class PathUnavailableError(RuntimeError):
    """The requested computation path does not apply to this input."""


class CutoffExhaustedError(RuntimeError):
    """A computation exceeded its configured capacity or degree cutoff."""


class OracleDisagreementError(RuntimeError):
    """Two independent computation paths disagree; halting rather than guessing."""


class NonlinearDependenceError(RuntimeError):
    """A coefficient solve came out nonlinear; solve manually."""


def rational_from_string(value: object) -> Fraction:
    """Parse a JSON-carried rational: "p/q", "p", or a plain int."""
    if isinstance(value, bool):
        raise ValidationError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"not a rational: {value!r}") from exc
    raise ValidationError(f"not a rational: {value!r}")


def rational_to_string(value: Fraction) -> str:
    """Serialize exactly: "p/q", or just "p" for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _as_monomial(m: Iterable[int], n: int) -> Monomial:
    t = tuple(m)
    if len(t) != n:
        raise ValidationError(f"monomial {t} has {len(t)} entries, expected {n}")
    for v in t:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValidationError(f"monomial {t} must have nonnegative integer entries")
    return t


@dataclass(frozen=True)
class SWHSingularity:
    """A germ f = sum_i c_i x_i^{e_i} + sum_a c_a x^a with all x^a of degree > 1.

    `exponents` are the e_i (each >= 2, at least two variables),
    `coefficients` the nonzero c_i (default: all 1), and `perturbation`
    the higher-order monomial terms as (monomial, coefficient) pairs.
    Instances are immutable and hashable.
    """

    exponents: tuple[int, ...]
    coefficients: tuple[Fraction, ...] = ()
    perturbation: tuple[tuple[Monomial, Fraction], ...] = ()

    def __post_init__(self) -> None:
        e = tuple(self.exponents)
        if len(e) < 2:
            raise ValidationError("need at least two variables")
        for ei in e:
            if not isinstance(ei, int) or isinstance(ei, bool) or ei < 2:
                raise ValidationError(f"exponents must be integers >= 2, got {ei!r}")
        object.__setattr__(self, "exponents", e)

        c = tuple(rational_from_string(x) for x in self.coefficients)
        if not c:
            c = (Fraction(1),) * len(e)
        if len(c) != len(e):
            raise ValidationError(
                f"{len(c)} coefficients for {len(e)} variables"
            )
        for ci in c:
            if ci == 0:
                raise ValidationError("principal-part coefficients must be nonzero")
        object.__setattr__(self, "coefficients", c)

        seen: set[Monomial] = set()
        pert = []
        for m, ca in self.perturbation:
            mono = _as_monomial(m, len(e))
            coeff = rational_from_string(ca)
            if coeff == 0:
                raise ValidationError(f"perturbation term {mono} has zero coefficient")
            if mono in seen:
                raise ValidationError(f"perturbation term {mono} repeated")
            seen.add(mono)
            if self.unshifted_degree(mono) <= 1:
                raise ValidationError(
                    f"perturbation term {mono} is not higher order "
                    f"(weighted degree {self.unshifted_degree(mono)} <= 1)"
                )
            pert.append((mono, coeff))
        object.__setattr__(self, "perturbation", tuple(pert))

    # -- basic invariants ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(1, ei) for ei in self.exponents)

    @property
    def milnor_number(self) -> int:
        return prod(ei - 1 for ei in self.exponents)

    @property
    def minimal_exponent(self) -> Fraction:
        """Smallest spectral number: sum of 1/e_i."""
        return sum((Fraction(1, ei) for ei in self.exponents), Fraction(0))

    @property
    def is_weighted_homogeneous(self) -> bool:
        return not self.perturbation

    def unshifted_degree(self, m: Iterable[int]) -> Fraction:
        """Weighted degree d(m) = sum m_i / e_i."""
        return sum(
            (Fraction(mi, ei) for mi, ei in zip(m, self.exponents, strict=True)),
            Fraction(0),
        )

    def shifted_degree(self, m: Iterable[int]) -> Fraction:
        """Degree of the class of x^m dx: sum (m_i + 1) / e_i."""
        return sum(
            (Fraction(mi + 1, ei) for mi, ei in zip(m, self.exponents, strict=True)),
            Fraction(0),
        )

    @property
    def rho(self) -> Fraction:
        """Smallest weighted degree among perturbation terms (> 1)."""
        if not self.perturbation:
            raise PathUnavailableError(
                "rho is undefined: the perturbation is empty"
            )
        return min(self.unshifted_degree(m) for m, _ in self.perturbation)

    @property
    def minimal_part(self) -> tuple[tuple[Monomial, Fraction], ...]:
        """Perturbation terms of minimal weighted degree, in input order."""
        r = self.rho
        return tuple(
            (m, c) for m, c in self.perturbation if self.unshifted_degree(m) == r
        )

    @property
    def branch_count(self) -> int:
        """Number of local branches of the zero fibre: 1 for n >= 3, gcd(e1,e2) for curves."""
        if self.n >= 3:
            return 1
        return gcd(self.exponents[0], self.exponents[1])

    # -- lattice boxes ---------------------------------------------------

    def box(self) -> Iterator[Monomial]:
        """All nu with 1 <= nu_i <= e_i - 1 (indexes the spectrum)."""
        return itertools.product(*(range(1, ei) for ei in self.exponents))

    def milnor_box(self) -> Iterator[Monomial]:
        """All m with 0 <= m_i <= e_i - 2 (monomial basis of the Milnor algebra)."""
        return itertools.product(*(range(0, ei - 1) for ei in self.exponents))

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        out: dict = {"exponents": list(self.exponents)}
        if any(ci != 1 for ci in self.coefficients):
            out["coefficients"] = [rational_to_string(ci) for ci in self.coefficients]
        if self.perturbation:
            out["perturbation"] = [
                {"m": list(m), "c": rational_to_string(c)}
                for m, c in self.perturbation
            ]
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "SWHSingularity":
        if not isinstance(data, dict):
            raise ValidationError("singularity must be a JSON object")
        if "exponents" not in data:
            raise ValidationError('missing "exponents"')
        exponents = data["exponents"]
        if not isinstance(exponents, list):
            raise ValidationError('"exponents" must be a list')
        coefficients = data.get("coefficients", [])
        if not isinstance(coefficients, list):
            raise ValidationError('"coefficients" must be a list')
        raw_pert = data.get("perturbation", [])
        if not isinstance(raw_pert, list):
            raise ValidationError('"perturbation" must be a list')
        pert = []
        for entry in raw_pert:
            if not isinstance(entry, dict) or "m" not in entry:
                raise ValidationError(
                    'perturbation entries must be objects with "m" and "c"'
                )
            pert.append((tuple(entry["m"]), entry.get("c", 1)))
        return cls(
            exponents=tuple(exponents),
            coefficients=tuple(coefficients),
            perturbation=tuple(pert),
        )
