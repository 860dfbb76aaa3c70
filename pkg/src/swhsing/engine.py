"""Symbolic leading-term engine for the Gauss-Manin lattice of f.

Classes [x^m dx] of the Brieskorn lattice decompose, degree by degree,
into graded components of the V-filtration; the t ∂_t action on the
localized lattice is semisimple here, so each class is the sum of its
components and the saturated lattice is spanned by their d_t-integrals.
This module computes those components exactly:

* a normal form rewriting any q d_t^k [x^mu dx] into box-monomial
  symbols (m', k'), driven by the relation [g d_i f dx] = d_t^{-1} [d_i g dx]
  applied to x_i^{e_i - 1} = (d_i f - sum_a c_a a_i x^{a - 1_i}) / (c_i e_i);

* the component expansion: the degree-alpha part of [x^m dx] is the
  degree-alpha part of the tail sum_a (1 - d(a)) c_a d_t [x^{m + a} dx]
  divided by (alpha - deg(m)), propagated level by level (each level
  climbs by at least rho - 1, so a degree window is exhausted in
  finitely many levels);

* the saturated lattice's rank profile per integer-translation coset:
  components enter at their degree and every d_t-integral re-enters
  higher with the same box-coordinate vector, so incremental Gaussian
  elimination in degree order yields the degrees where new classes are
  born.  Birth degrees are exactly the exponents alpha - r whose
  negatives are the reduced Bernstein-Sato roots.

Coefficients are exact Fractions, or polynomials in one unknown
perturbation coefficient when solving for a cancellation.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .model import (
    CutoffExhaustedError,
    Monomial,
    NonlinearDependenceError,
    PathUnavailableError,
    SWHSingularity,
    ValidationError,
)
from .ratpoly import RatPoly

ENGINE_BOX_CAP = 4096


class GaussManinEngine:
    """Exact expansion engine for one singularity, valid mod V^{> cutoff}.

    The default cutoff is the largest box degree n - alpha_tilde_f,
    which is high enough to see every birth.  Pass `symbolic_index` to
    replace that perturbation term's coefficient by an unknown c and
    compute over Q[c] (rank/birth queries then become unavailable).
    """

    def __init__(
        self,
        s: SWHSingularity,
        cutoff: Fraction | None = None,
        symbolic_index: int | None = None,
    ):
        if s.milnor_number > ENGINE_BOX_CAP:
            raise CutoffExhaustedError(
                f"engine is desk-scale: {s.milnor_number} classes exceeds {ENGINE_BOX_CAP}"
            )
        self.s = s
        self.exponents = s.exponents
        self.symbolic_index = symbolic_index
        self._one = Fraction(1)
        pert = []
        for idx, (a, ca) in enumerate(s.perturbation):
            if symbolic_index is not None and idx == symbolic_index:
                ca = RatPoly.variable()
                self._one = RatPoly.const(1)
            pert.append((a, ca, s.unshifted_degree(a)))
        if symbolic_index is not None and not (
            0 <= symbolic_index < len(s.perturbation)
        ):
            raise ValidationError(
                f"symbolic_index {symbolic_index} out of range"
            )
        self._pert = pert
        self._min_alpha = s.minimal_exponent
        self._max_alpha = s.n - self._min_alpha
        self.cutoff = Fraction(cutoff) if cutoff is not None else self._max_alpha
        if self.cutoff < self._min_alpha:
            raise ValidationError("cutoff lies below every class degree")
        self.window = self.cutoff - self._min_alpha
        self._nf_cap = self._max_alpha + self.window + 1
        self._box = list(s.milnor_box())
        self._deg = {m: s.shifted_degree(m) for m in self._box}
        self._nf_memo: dict[Monomial, dict] = {}
        self._exp: dict[Monomial, dict] | None = None
        self._profile = None

    # -- normal form -------------------------------------------------------

    def normal_form(self, mu, k: int = 0) -> dict[tuple[Monomial, int], object]:
        """[x^mu dx] as a combination of box symbols (m', k'), mod V^{> nf cap}."""
        mu = tuple(mu)
        if len(mu) != self.s.n or any(v < 0 for v in mu):
            raise ValidationError(f"not a monomial of {self.s.n} variables: {mu}")
        base = self._nf(mu)
        if k:
            return {(m1, k1 + k): q for (m1, k1), q in base.items()}
        return dict(base)

    def _nf(self, mu: Monomial) -> dict:
        cached = self._nf_memo.get(mu)
        if cached is not None:
            return cached
        e = self.exponents
        coeffs = self.s.coefficients
        out: dict = {}
        pending: dict = {}
        heap: list = []
        done = set()

        def push(q, m, k):
            if not q:
                return
            deg = self.s.shifted_degree(m) - k
            if deg > self._nf_cap:
                return
            key = (m, k)
            assert key not in done, "rewriting emitted a settled key"
            if key in pending:
                pending[key] = pending[key] + q
            else:
                pending[key] = q
                heapq.heappush(heap, (deg, -sum(m), m, k))

        push(self._one, mu, 0)
        while heap:
            _, _, m, k = heapq.heappop(heap)
            q = pending.pop((m, k), None)
            if q is None:
                continue
            done.add((m, k))
            if not q:
                continue
            i = next(
                (i for i, (mi, ei) in enumerate(zip(m, e)) if mi >= ei - 1), None
            )
            if i is None:
                prev = out.get((m, k))
                out[(m, k)] = q if prev is None else prev + q
                continue
            scale = coeffs[i] * e[i]
            mp = list(m)
            mp[i] -= e[i] - 1
            if mp[i] > 0:
                first = tuple(
                    v - 1 if j == i else v for j, v in enumerate(mp)
                )
                push(q * (Fraction(mp[i]) / scale), first, k - 1)
            for a, ca, _ in self._pert:
                if a[i]:
                    corr = tuple(
                        v + a[j] - (1 if j == i else 0)
                        for j, v in enumerate(mp)
                    )
                    push(q * ca * (Fraction(-a[i]) / scale), corr, k)
        out = {key: q for key, q in out.items() if q}
        self._nf_memo[mu] = out
        return out

    # -- component expansion -------------------------------------------------

    def _compute_expansions(self) -> None:
        if self._exp is not None:
            return
        box = self._box
        exp = {m: {(m, 0): self._one} for m in box}
        if self._pert:
            frontier = {m: {(m, 0): self._one} for m in box}
            min_excess = min(da - 1 for _, _, da in self._pert)
            max_levels = int(self.window / min_excess) + 3
            for _ in range(max_levels + 1):
                if not any(frontier.values()):
                    break
                new_frontier: dict[Monomial, dict] = {m: {} for m in box}
                for m in box:
                    am = self._deg[m]
                    for a, ca, da in self._pert:
                        scale = ca * (1 - da)
                        ma = tuple(mi + ai for mi, ai in zip(m, a))
                        for (m1, k1), q1 in self._nf(ma).items():
                            sub = frontier[m1]
                            if not sub:
                                continue
                            qq = scale * q1
                            for (m2, k2), q2 in sub.items():
                                k_new = k2 + k1 + 1
                                rel = self._deg[m2] - k_new - am
                                if rel > self.window:
                                    continue
                                assert rel > 0, "tail fell onto or below the leading degree"
                                slot = new_frontier[m]
                                key = (m2, k_new)
                                inc = qq * q2 / rel
                                prev = slot.get(key)
                                slot[key] = inc if prev is None else prev + inc
                for m in box:
                    add = {k: v for k, v in new_frontier[m].items() if v}
                    new_frontier[m] = add
                    tgt = exp[m]
                    for key, v in add.items():
                        prev = tgt.get(key)
                        tgt[key] = v if prev is None else prev + v
                frontier = new_frontier
            else:
                raise CutoffExhaustedError(
                    "expansion did not stabilize within the level budget"
                )
        self._exp = {
            m: {key: q for key, q in d.items() if q} for m, d in exp.items()
        }

    def expansion(self, m) -> dict[tuple[Monomial, int], object]:
        """All components of the box class [x^m dx], as symbol -> coefficient."""
        m = tuple(m)
        self._compute_expansions()
        if m not in self._exp:
            raise ValidationError(f"{m} is not in the Milnor box")
        return dict(self._exp[m])

    def expand_class(self, mu, k: int = 0) -> dict[tuple[Monomial, int], object]:
        """Components of d_t^k [x^mu dx] for an arbitrary monomial mu."""
        out: dict = {}
        for (m1, k1), q1 in self.normal_form(mu, k).items():
            for (m2, k2), q2 in self.expansion(m1).items():
                key = (m2, k2 + k1)
                inc = q1 * q2
                prev = out.get(key)
                out[key] = inc if prev is None else prev + inc
        return {key: q for key, q in out.items() if q}

    def components_by_degree(self, mu, k: int = 0) -> dict[Fraction, dict]:
        """Group expand_class output by component degree."""
        out: dict[Fraction, dict] = {}
        for (m2, k2), q in self.expand_class(mu, k).items():
            deg = self.s.shifted_degree(m2) - k2
            out.setdefault(deg, {})[(m2, k2)] = q
        return dict(sorted(out.items()))

    def component(self, mu, degree: Fraction, k: int = 0) -> dict:
        """The degree-`degree` component of d_t^k [x^mu dx]."""
        degree = Fraction(degree)
        return {
            key: q
            for key, q in self.expand_class(mu, k).items()
            if self.s.shifted_degree(key[0]) - key[1] == degree
        }

    # -- saturation ranks ----------------------------------------------------

    def _require_numeric(self) -> None:
        if self.symbolic_index is not None:
            raise PathUnavailableError(
                "rank queries need numeric coefficients, not a symbolic unknown"
            )

    def saturation_profile(self):
        """Per coset (degree mod 1): sorted birth degrees with multiplicities.

        Returns {coset: [(degree, jump), ...]} over degrees <= cutoff.
        """
        self._require_numeric()
        if self.cutoff < self._max_alpha:
            raise CutoffExhaustedError(
                f"cutoff {self.cutoff} does not cover the top class degree "
                f"{self._max_alpha}; births above it would be missed"
            )
        if self._profile is not None:
            return self._profile
        self._compute_expansions()

        by_coset: dict[Fraction, list[tuple[Fraction, dict]]] = {}
        for m in self._box:
            per_degree: dict[Fraction, dict[Monomial, Fraction]] = {}
            for (m2, k2), q in self._exp[m].items():
                deg = self._deg[m2] - k2
                if deg > self.cutoff:
                    continue
                per_degree.setdefault(deg, {})[m2] = q
            for deg, vec in per_degree.items():
                by_coset.setdefault(deg % 1, []).append((deg, vec))

        profile: dict[Fraction, list[tuple[Fraction, int]]] = {}
        for coset, entries in sorted(by_coset.items()):
            entries.sort(key=lambda t: t[0])
            basis: dict[Monomial, dict[Monomial, Fraction]] = {}
            births: list[tuple[Fraction, int]] = []
            for deg, vec in entries:
                vec = dict(vec)
                for pivot, bvec in basis.items():
                    q = vec.get(pivot)
                    if q:
                        for mm, bq in bvec.items():
                            r = vec.get(mm, Fraction(0)) - q * bq
                            if r:
                                vec[mm] = r
                            else:
                                vec.pop(mm, None)
                if not vec:
                    continue
                pivot = min(vec)
                inv = Fraction(1) / vec[pivot]
                basis[pivot] = {mm: q * inv for mm, q in vec.items()}
                if births and births[-1][0] == deg:
                    births[-1] = (deg, births[-1][1] + 1)
                else:
                    births.append((deg, 1))
            profile[coset] = births
            expected = sum(1 for m in self._box if self._deg[m] % 1 == coset)
            found = sum(j for _, j in births)
            if found != expected:
                raise CutoffExhaustedError(
                    f"rank deficit in coset {coset}: {found} of {expected} classes born"
                )
        self._profile = profile
        return profile

    def birth_degrees(self) -> dict[Fraction, int]:
        """All birth degrees with multiplicities, across cosets."""
        out: dict[Fraction, int] = {}
        for births in self.saturation_profile().values():
            for deg, jump in births:
                out[deg] = out.get(deg, 0) + jump
        return dict(sorted(out.items()))

    def root_exponents(self) -> set[Fraction]:
        return set(self.birth_degrees())

    def nu_tilde(self, alpha: Fraction) -> int:
        """Rank of the saturation's coset of alpha at degrees <= alpha."""
        alpha = Fraction(alpha)
        births = self.saturation_profile().get(alpha % 1, [])
        return sum(j for deg, j in births if deg <= alpha)

    # -- shifts ----------------------------------------------------------------

    def expansion_shift(self, nu) -> int:
        """Engine-side saturation shift of the spectrum-box index nu."""
        return self.shift_table()[tuple(nu)]

    def shift_table(self) -> dict[Monomial, int]:
        """Shifts for every nu in the spectrum box.

        Single-monomial perturbations give each class its own shift (every
        component lies on a single symbol line, so hits are attributed
        directly).  With several perturbation monomials the birth degrees
        per coset are canonical but their attribution to equal-degree
        classes is a sorted pairing - a documented presentation choice.
        """
        self._require_numeric()
        table: dict[Monomial, int] = {}
        if len(self._pert) <= 1:
            self._compute_expansions()
            best: dict[Monomial, int] = {}
            for m in self._box:
                for (m2, k2), _ in self._exp[m].items():
                    if self._deg[m2] - k2 > self.cutoff:
                        continue
                    if k2 > best.get(m2, 0):
                        best[m2] = k2
            for m2 in self._box:
                nu = tuple(v + 1 for v in m2)
                table[nu] = best.get(m2, 0)
            return table
        profile = self.saturation_profile()
        for coset, births in profile.items():
            classes = sorted(
                (self._deg[m], m) for m in self._box if self._deg[m] % 1 == coset
            )
            flat: list[Fraction] = []
            for deg, jump in births:
                flat.extend([deg] * jump)
            for (alpha, m), birth in zip(classes, flat, strict=True):
                r = alpha - birth
                assert r.denominator == 1 and r >= 0
                table[tuple(v + 1 for v in m)] = int(r)
        return table


def find_cancelling_coefficient(
    s: SWHSingularity,
    symbolic_index: int,
    target_monomial,
    target_degree: Fraction,
) -> Fraction:
    """Value of one perturbation coefficient that kills a target component.

    Runs the engine over Q[c] with the chosen coefficient as the unknown
    and solves component(target) = 0 at the given degree.  Raises
    NonlinearDependenceError when the dependence is not affine (solve
    manually), ValidationError when no value works or when the component
    vanishes identically.
    """
    target_degree = Fraction(target_degree)
    eng = GaussManinEngine(
        s, cutoff=target_degree, symbolic_index=symbolic_index
    )
    comp = eng.component(tuple(target_monomial), target_degree)
    if not comp:
        raise ValidationError(
            "target component is identically zero; nothing to solve"
        )
    solution: Fraction | None = None
    saw_unknown = False
    inconsistent = False
    for poly in comp.values():
        if not isinstance(poly, RatPoly):
            poly = RatPoly.const(poly)
        if poly.degree >= 2:
            raise NonlinearDependenceError(
                f"component depends on the unknown with degree {poly.degree}; "
                "solve manually"
            )
        a1 = poly.coefficient(1)
        a0 = poly.coefficient(0)
        if a1 == 0:
            if a0 != 0:
                inconsistent = True
            continue
        saw_unknown = True
        c = -a0 / a1
        if solution is None:
            solution = c
        elif solution != c:
            inconsistent = True
    if not saw_unknown:
        raise ValidationError(
            "target component does not involve the unknown; nothing to solve"
        )
    if inconsistent or any(
        (p if isinstance(p, RatPoly) else RatPoly.const(p))(solution) != 0
        for p in comp.values()
    ):
        raise ValidationError(
            "no value of the chosen coefficient cancels the target component"
        )
    return solution
