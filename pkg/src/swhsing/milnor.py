"""Milnor algebra of a Brieskorn-Pham principal part, and its graded pieces.

For f1 = sum c_i x_i^{e_i} the Jacobian ideal is (x_i^{e_i-1}), so the
monomials with every exponent <= e_i - 2 form a basis (the "box").  The
grading by shifted weighted degree has the spectrum multiplicities as
its dimensions.  For the perturbed germ the graded quotient ring is
canonically identified with that of the principal part, so membership
questions reduce to the box test.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .model import CutoffExhaustedError, Monomial, SWHSingularity
from .spectrum import spectrum

BASIS_CAP = 1_000_000


def is_nonzero_in_milnor(s: SWHSingularity, m: Iterable[int]) -> bool:
    """True iff x^m is nonzero in the Milnor algebra of the principal part."""
    return all(0 <= mi <= ei - 2 for mi, ei in zip(m, s.exponents, strict=True))


def class_nonzero_in_grV(s: SWHSingularity, m: Iterable[int]) -> bool:
    """True iff x^m has nonzero image in the V-graded Milnor algebra of f.

    The graded pieces only see the principal part, so this is the same
    box test as `is_nonzero_in_milnor`; stated separately because the
    question (and its use in the deformation checkers) is about f, not f1.
    """
    return is_nonzero_in_milnor(s, m)


def graded_dimension(s: SWHSingularity, alpha: Fraction) -> int:
    """Dimension of the degree-alpha piece: the spectrum multiplicity."""
    return spectrum(s).multiplicity(Fraction(alpha))


def milnor_basis(s: SWHSingularity) -> Iterator[Monomial]:
    """The box basis, smallest exponents first; capped for huge algebras."""
    if s.milnor_number > BASIS_CAP:
        raise CutoffExhaustedError(
            f"refusing to materialize a basis of {s.milnor_number} monomials"
        )
    return s.milnor_box()


def basis_of_degree(s: SWHSingularity, alpha: Fraction) -> list[Monomial]:
    """Box monomials whose class lives in degree alpha."""
    alpha = Fraction(alpha)
    if s.milnor_number > BASIS_CAP:
        raise CutoffExhaustedError(
            f"refusing to materialize a basis of {s.milnor_number} monomials"
        )
    return [m for m in s.milnor_box() if s.shifted_degree(m) == alpha]
