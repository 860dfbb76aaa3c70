"""Sparse univariate polynomials over Q, just enough for coefficient solves.

The expansion engine usually runs over plain Fractions; to find a
perturbation coefficient that kills a target component it runs once
over Q[c] instead.  Only the operations that run needs exist: ring
arithmetic, scalar division, degree, evaluation.
"""

from __future__ import annotations

from fractions import Fraction


class RatPoly:
    """Immutable sparse polynomial in one variable over Fraction."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Fraction] | None = None):
        clean = {}
        if coeffs:
            for k, v in coeffs.items():
                v = Fraction(v)
                if v:
                    clean[int(k)] = v
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *args):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def const(cls, q) -> "RatPoly":
        return cls({0: Fraction(q)})

    @classmethod
    def variable(cls) -> "RatPoly":
        return cls({1: Fraction(1)})

    @staticmethod
    def _coerce(other) -> "RatPoly | None":
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.const(other)
        return None

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return max(self.coeffs, default=-1)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        return NotImplemented if o is None else self.coeffs == o.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other) -> "RatPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in o.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other) -> "RatPoly":
        o = self._coerce(other)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, other) -> "RatPoly":
        o = self._coerce(other)
        return NotImplemented if o is None else o + (-self)

    def __mul__(self, other) -> "RatPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in o.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatPoly":
        if isinstance(other, RatPoly):
            if other.degree == 0:
                other = other.coeffs[0]
            else:
                return NotImplemented
        if isinstance(other, (int, Fraction)):
            return RatPoly({k: v / other for k, v in self.coeffs.items()})
        return NotImplemented

    def __call__(self, value) -> Fraction:
        value = Fraction(value)
        return sum(
            (c * value**k for k, c in self.coeffs.items()), Fraction(0)
        )

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs.get(k, Fraction(0))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "RatPoly(0)"
        parts = [
            f"{v}*c^{k}" if k else str(v)
            for k, v in sorted(self.coeffs.items())
        ]
        return "RatPoly(" + " + ".join(parts) + ")"
