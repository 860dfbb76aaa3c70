"""Singularity spectrum of Brieskorn-Pham principal parts.

The spectrum is the multiset { sum_i nu_i/e_i : 1 <= nu_i <= e_i - 1 },
which only depends on the principal part (it is constant in the family
f1 + higher-order terms).  Two backends: an exact dict of Fraction
multiplicities for small Milnor numbers, and an integer counting array
over the common denominator for large ones, so that million-class
spectra are counted without materializing any per-class data.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterator

import numpy as np

from .model import CutoffExhaustedError, SWHSingularity, ValidationError

# Dict backend up to this many classes; beyond it, counting arrays.
DICT_CAP = 200_000
# Refuse counting arrays longer than this (int64 entries).
ARRAY_CAP = 60_000_000
# entries() refuses to materialize more than this many distinct values.
MATERIALIZE_CAP = 2_000_000


@dataclass
class SpectrumSeries:
    """Multiset of spectral numbers with exact multiplicities.

    Either `_counts` (Fraction -> multiplicity) or `_array` (index t
    holds the multiplicity of t/_scale) is set, never both.
    """

    n: int
    mu: int
    _counts: dict[Fraction, int] | None = None
    _array: np.ndarray | None = None
    _scale: int = 1

    # -- scalar queries ----------------------------------------------------

    def multiplicity(self, alpha: Fraction) -> int:
        alpha = Fraction(alpha)
        if self._counts is not None:
            return self._counts.get(alpha, 0)
        t = alpha * self._scale
        if t.denominator != 1 or t < 0 or t >= len(self._array):
            return 0
        return int(self._array[int(t)])

    @property
    def min_alpha(self) -> Fraction:
        if self._counts is not None:
            return min(self._counts)
        t = int(np.flatnonzero(self._array)[0])
        return Fraction(t, self._scale)

    @property
    def max_alpha(self) -> Fraction:
        if self._counts is not None:
            return max(self._counts)
        t = int(np.flatnonzero(self._array)[-1])
        return Fraction(t, self._scale)

    @property
    def geometric_genus(self) -> int:
        """Total multiplicity of spectral numbers <= 1."""
        if self._counts is not None:
            return sum(m for a, m in self._counts.items() if a <= 1)
        return int(self._array[: self._scale + 1].sum())

    @property
    def reduced_genus(self) -> int:
        """Multiplicity of the spectral number 1."""
        return self.multiplicity(Fraction(1))

    def integral_multiplicities(self) -> dict[int, int]:
        """Multiplicities of the integer spectral numbers."""
        if self._counts is not None:
            return {
                int(a): m for a, m in sorted(self._counts.items())
                if a.denominator == 1
            }
        out = {}
        for k in range(0, len(self._array) // self._scale + 1):
            t = k * self._scale
            if t < len(self._array) and self._array[t]:
                out[k] = int(self._array[t])
        return out

    def coset_cumulative(self, alpha: Fraction) -> int:
        """Total multiplicity of spectral numbers beta <= alpha with alpha - beta integral."""
        alpha = Fraction(alpha)
        if self._counts is not None:
            return sum(
                m for a, m in self._counts.items()
                if a <= alpha and (alpha - a).denominator == 1
            )
        t = alpha * self._scale
        if t.denominator != 1:
            return 0
        t = int(t)
        if t < 0:
            return 0
        t = min(t, len(self._array) - 1)
        first = t % self._scale
        return int(self._array[first : t + 1 : self._scale].sum())

    def is_symmetric(self) -> bool:
        """Check n_{alpha} == n_{n - alpha} throughout."""
        if self._counts is not None:
            return all(
                m == self._counts.get(self.n - a, 0)
                for a, m in self._counts.items()
            )
        total = self.n * self._scale
        if total + 1 < len(self._array):
            return False
        padded = np.zeros(total + 1, dtype=np.int64)
        padded[: len(self._array)] = self._array
        return bool(np.array_equal(padded, padded[::-1]))

    # -- iteration / materialization ----------------------------------------

    @property
    def distinct_count(self) -> int:
        if self._counts is not None:
            return len(self._counts)
        return int(np.count_nonzero(self._array))

    def items(self) -> Iterator[tuple[Fraction, int]]:
        """Sorted (alpha, multiplicity) pairs, lazily."""
        if self._counts is not None:
            yield from sorted(self._counts.items())
            return
        for t in np.flatnonzero(self._array):
            yield Fraction(int(t), self._scale), int(self._array[t])

    def entries(self) -> list[tuple[Fraction, int]]:
        if self.distinct_count > MATERIALIZE_CAP:
            raise CutoffExhaustedError(
                f"refusing to materialize {self.distinct_count} spectral classes"
            )
        return list(self.items())

    def eigenvalue_classes(self) -> dict[Fraction, list[tuple[Fraction, int]]]:
        """Group entries by alpha mod 1 (monodromy eigenvalue exp(-2 pi i alpha))."""
        out: dict[Fraction, list[tuple[Fraction, int]]] = {}
        for a, m in self.entries():
            out.setdefault(a % 1, []).append((a, m))
        return out

    def support(self) -> set[Fraction]:
        return {a for a, _ in self.entries()}


def spectrum(s: SWHSingularity) -> SpectrumSeries:
    """Spectrum of f (depends only on the exponents of the principal part)."""
    return spectrum_of_exponents(s.exponents)


def spectrum_of_exponents(exponents: tuple[int, ...]) -> SpectrumSeries:
    mu = 1
    for e in exponents:
        mu *= e - 1
    if mu <= DICT_CAP:
        counts: Counter[Fraction] = Counter()
        for nu in itertools.product(*(range(1, e) for e in exponents)):
            counts[sum(Fraction(v, e) for v, e in zip(nu, exponents))] += 1
        return SpectrumSeries(n=len(exponents), mu=mu, _counts=dict(counts))

    L = lcm(*exponents)
    length = sum((e - 1) * (L // e) for e in exponents) + 1
    if length > ARRAY_CAP:
        raise CutoffExhaustedError(
            f"spectrum counting array would need {length} entries (cap {ARRAY_CAP})"
        )
    arr = np.ones(1, dtype=np.int64)
    for e in exponents:
        step = L // e
        new = np.zeros(len(arr) + (e - 1) * step, dtype=np.int64)
        for k in range(1, e):
            new[k * step : k * step + len(arr)] += arr
        arr = new
    return SpectrumSeries(n=len(exponents), mu=mu, _array=arr, _scale=L)


def spectrum_from_weights(weights) -> SpectrumSeries:
    """Spectrum from a rational weight vector via prod_i (t^{w_i} - t)/(1 - t^{w_i}).

    Works for any weight vector of an isolated singularity (weights need
    not be reciprocals of integers); the product is expanded by exact
    polynomial division over u = t^{1/L}.  A nonzero remainder means the
    input is not such a weight vector.
    """
    ws = [Fraction(w) for w in weights]
    if not ws:
        raise ValidationError("need at least one weight")
    for w in ws:
        if not 0 < w < 1:
            raise ValidationError(f"weights must lie in (0, 1), got {w}")
    L = lcm(*(w.denominator for w in ws))
    ks = [int(w * L) for w in ws]
    if sum(L - k for k in ks) + 1 > ARRAY_CAP:
        raise CutoffExhaustedError("weight denominators too large")

    # Each factor is u^k (1 - u^{L-k}) / (1 - u^k); collect the power of u
    # up front and expand the rest by exact integer polynomial division.
    num = [1]
    for k in ks:
        m = L - k
        new = [0] * (len(num) + m)
        for i, c in enumerate(num):
            if c:
                new[i] += c
                new[i + m] -= c
        num = new
    for k in ks:
        q = [0] * len(num)
        for j in range(len(num)):
            q[j] = num[j] + (q[j - k] if j >= k else 0)
        if any(q[len(num) - k :]):
            raise ValidationError(
                "not the weight vector of an isolated singularity"
            )
        num = q[: len(num) - k]

    shift = sum(ks)
    counts: dict[Fraction, int] = {}
    mu = 0
    for j, c in enumerate(num):
        if c < 0:
            raise ValidationError("not the weight vector of an isolated singularity")
        if c:
            counts[Fraction(j + shift, L)] = c
            mu += c
    if not counts:
        raise ValidationError("not the weight vector of an isolated singularity")
    return SpectrumSeries(n=len(ws), mu=mu, _counts=counts)
