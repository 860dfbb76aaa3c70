"""Built-in verification battery of worked examples with known answers.

Each anchor pins library output to independently established constants
for one small singularity: plane-curve spectra and shifted roots, the
Fermat-quartic length jump, a six-variable parity example, a disguised
weighted homogeneous germ, and the coefficient-tuned cancellation runs
of the expansion engine.  `verify_paper` executes the battery and
reports expected-versus-actual per anchor; engine-backed anchors can be
skipped for a combinatorics-only run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import shifts as _shifts
from . import witnesses as _witnesses
from .length import length as _length_report
from .spectrum import spectrum as _spectrum_of
from .spectrum import spectrum_from_weights as _spectrum_from_weights
from .model import SWHSingularity

F = Fraction


@dataclass(frozen=True)
class AnchorCheck:
    label: str
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "expected": self.expected,
            "actual": self.actual,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class AnchorResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    checks: tuple[AnchorCheck, ...]

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "checks": [c.to_json_dict() for c in self.checks],
        }


def _result(name: str, checks: list[AnchorCheck]) -> AnchorResult:
    status = "pass" if all(c.ok for c in checks) else "fail"
    return AnchorResult(name=name, status=status, checks=tuple(checks))


def _skip(name: str) -> AnchorResult:
    return AnchorResult(name=name, status="skip", checks=())


def _fmt(value) -> str:
    """Canonical printable form used on both sides of a check."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return "{" + ", ".join(
            f"{_fmt(k)}: {_fmt(v)}" for k, v in sorted(value.items())
        ) + "}"
    if isinstance(value, (set, frozenset)):
        return "{" + ", ".join(sorted(_fmt(v) for v in value)) + "}"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    return str(value)


def _check(label: str, expected, actual) -> AnchorCheck:
    return AnchorCheck(label=label, expected=_fmt(expected), actual=_fmt(actual))


# -- individual anchors ------------------------------------------------------


def _anchor_plane_curve_spectrum() -> AnchorResult:
    s = SWHSingularity((6, 5))
    sp = _spectrum_of(s)
    expected = sorted(
        F(5 * i + 6 * j, 30) for i in range(1, 6) for j in range(1, 5)
    )
    return _result(
        "plane-curve-spectrum",
        [
            _check("mu", 20, sp.mu),
            _check("entries", [(a, 1) for a in expected], sp.entries()),
            _check("min", F(11, 30), sp.min_alpha),
            _check("max", F(49, 30), sp.max_alpha),
        ],
    )


def _pc_perturbed() -> SWHSingularity:
    return SWHSingularity((6, 5), perturbation=(((2, 4), F(1)),))


def _anchor_plane_curve_shift() -> AnchorResult:
    s = _pc_perturbed()
    support = _spectrum_of(s).support()
    expected_roots = (support | {F(19, 30)}) - {F(49, 30)}
    roots = _shifts.root_exponents(s)
    table = _shifts.shift_table(s)
    nonzero = {nu: r for nu, r in table.items() if r}
    return _result(
        "plane-curve-shift",
        [
            _check("root-exponents", expected_roots, roots),
            _check("nonzero-shifts", {(5, 4): 1}, nonzero),
        ],
    )


def _anchor_plane_curve_shift_engine() -> AnchorResult:
    from .engine import GaussManinEngine

    s = _pc_perturbed()
    eng = GaussManinEngine(s)
    return _result(
        "plane-curve-shift-engine",
        [
            _check(
                "shift-table",
                _shifts.shift_table(s),
                eng.shift_table(),
            ),
            _check(
                "root-exponents",
                _shifts.root_exponents(s),
                eng.root_exponents(),
            ),
        ],
    )


def _anchor_fermat_quartic_stable() -> AnchorResult:
    f1 = SWHSingularity((4, 4, 4))
    f = SWHSingularity((4, 4, 4), perturbation=(((2, 2, 2), F(1)),))
    cond = _witnesses.check_thm2_i(f, F(1))
    return _result(
        "fermat-quartic-stable",
        [
            _check("condition-i", True, cond.holds),
            _check("bound", F(5, 4), cond.bound),
            _check("perturbed-length", 5, _length_report(f, F(1)).length),
            _check("principal-length", 5, _length_report(f1, F(1)).length),
        ],
    )


def _anchor_fermat_quartic_jump() -> AnchorResult:
    f1 = SWHSingularity((4, 4, 4))
    f = SWHSingularity((4, 4, 4), perturbation=(((2, 2, 1), F(1)),))
    cond = _witnesses.check_thm2_i(f, F(1))
    wit = _witnesses.check_thm2_ii(f, F(1), 1)
    return _result(
        "fermat-quartic-jump",
        [
            _check("condition-i", False, cond.holds),
            _check("bound", F(1), cond.bound),
            _check("witness-kind", "equality-8", wit.kind if wit else None),
            _check("witness-h", (0, 0, 0), wit.h if wit else None),
            _check("perturbed-length", 6, _length_report(f, F(1)).length),
            _check("principal-length", 5, _length_report(f1, F(1)).length),
        ],
    )


def _anchor_six_variable_parity() -> AnchorResult:
    s = SWHSingularity(
        (6, 10, 14, 22, 26, 34),
        perturbation=(((1, 2, 3, 5, 6, 8), F(1)),),
    )
    sp = _spectrum_of(s)
    w1 = _witnesses.check_thm2_ii(s, F(1), 1)
    w2 = _witnesses.check_thm2_ii(s, F(1), 2)
    return _result(
        "six-variable-parity",
        [
            _check("mu", 10135125, sp.mu),
            _check("rho", F(650537, 510510), s.rho),
            _check("rho-exceeds-1", True, s.rho > 1),
            _check("minimal-exponent", F(115228, 255255), s.minimal_exponent),
            _check("integral-spectrum", {3: 1}, sp.integral_multiplicities()),
            _check("witness-r1", None, w1),
            _check("witness-r2-kind", "condition-ii", w2.kind if w2 else None),
            _check(
                "witness-r2-h", (0, 0, 0, 0, 0, 0), w2.h if w2 else None
            ),
        ],
    )


def _anchor_hidden_homogeneous() -> AnchorResult:
    from .engine import GaussManinEngine

    s = SWHSingularity(
        (6, 5),
        perturbation=(((4, 3), F(10)), ((2, 4), F(5))),
    )
    eng = GaussManinEngine(s)
    table = eng.shift_table()
    births = eng.birth_degrees()
    sp_counts = dict(_spectrum_of(s).items())
    single = SWHSingularity((6, 5), perturbation=(((4, 3), F(10)),))
    single_nonzero = sum(1 for r in _shifts.shift_table(single).values() if r)
    return _result(
        "hidden-homogeneous",
        [
            _check("all-shifts-zero", {}, {n: r for n, r in table.items() if r}),
            _check("births-equal-spectrum", sp_counts, births),
            _check(
                "single-term-formula-disagrees", True, single_nonzero > 0
            ),
        ],
    )


def _cancel_a_base(c: Fraction) -> SWHSingularity:
    return SWHSingularity(
        (7, 5),
        coefficients=(F(1, 7), F(1, 5)),
        perturbation=(((3, 3), F(1)), ((5, 2), c)),
    )


def _anchor_engine_cancel_a() -> AnchorResult:
    from .engine import GaussManinEngine, find_cancelling_coefficient

    solved = find_cancelling_coefficient(
        _cancel_a_base(F(1)), 1, (0, 0), F(16, 35)
    )
    special = GaussManinEngine(_cancel_a_base(F(6)), cutoff=F(16, 35))
    generic = GaussManinEngine(_cancel_a_base(F(1)), cutoff=F(16, 35))
    return _result(
        "engine-cancel-a",
        [
            _check("cancelling-coefficient", F(6), solved),
            _check(
                "special-component-vanishes",
                {},
                special.component((0, 0), F(16, 35)),
            ),
            _check(
                "generic-component",
                {((5, 2), 1): F(5)},
                generic.component((0, 0), F(16, 35)),
            ),
        ],
    )


def _anchor_engine_cancel_b() -> AnchorResult:
    from .engine import find_cancelling_coefficient

    s = SWHSingularity(
        (7, 6),
        perturbation=(((5, 2), F(1)), ((3, 4), F(1))),
    )
    solved = find_cancelling_coefficient(s, 1, (0, 0), F(17, 42))
    return _result(
        "engine-cancel-b",
        [_check("cancelling-coefficient", F(2, 7), solved)],
    )


def _anchor_engine_cancel_b_stretch() -> AnchorResult:
    from .engine import GaussManinEngine, find_cancelling_coefficient

    s = SWHSingularity(
        (7, 6),
        perturbation=(
            ((5, 2), F(1)),
            ((3, 4), F(5, 14)),
            ((4, 4), F(-5, 16464)),
        ),
    )
    solved_c2 = find_cancelling_coefficient(s, 2, (0, 0), F(23, 42))
    roots = GaussManinEngine(s).root_exponents()
    return _result(
        "engine-cancel-b-stretch",
        [
            _check("second-coefficient", F(-5, 16464), solved_c2),
            _check("stretched-exponent-present", True, F(65, 42) in roots),
            _check("cancelled-exponent-absent", False, F(23, 42) in roots),
        ],
    )


def _anchor_quartic_cor1_witnesses() -> AnchorResult:
    m_ii, m_i = _witnesses.corollary1_witness(3, 4)
    f_i = SWHSingularity((4, 4, 4), perturbation=((m_i, F(1)),))
    f_ii = SWHSingularity((4, 4, 4), perturbation=((m_ii, F(1)),))
    cond = _witnesses.check_thm2_i(f_i, F(1))
    wit = _witnesses.check_thm2_ii(f_ii, F(1), 1)
    return _result(
        "quartic-cor1-witnesses",
        [
            _check("monomial-ii", (2, 2, 1), m_ii),
            _check("monomial-i", (2, 2, 2), m_i),
            _check("condition-i-accepts", True, cond.holds),
            _check(
                "condition-ii-kind", "equality-8", wit.kind if wit else None
            ),
        ],
    )


def _anchor_e7_weights() -> AnchorResult:
    sp = _spectrum_from_weights((F(1, 3), F(2, 9)))
    expected = [
        (F(5, 9), 1),
        (F(7, 9), 1),
        (F(8, 9), 1),
        (F(1), 1),
        (F(10, 9), 1),
        (F(11, 9), 1),
        (F(13, 9), 1),
    ]
    return _result(
        "e7-weights",
        [
            _check("mu", 7, sp.mu),
            _check("entries", expected, sp.entries()),
        ],
    )


_COMBINATORIAL = (
    _anchor_plane_curve_spectrum,
    _anchor_plane_curve_shift,
    _anchor_fermat_quartic_stable,
    _anchor_fermat_quartic_jump,
    _anchor_six_variable_parity,
    _anchor_quartic_cor1_witnesses,
    _anchor_e7_weights,
)

_ENGINE = (
    _anchor_plane_curve_shift_engine,
    _anchor_hidden_homogeneous,
    _anchor_engine_cancel_a,
    _anchor_engine_cancel_b,
    _anchor_engine_cancel_b_stretch,
)

_ORDER = (
    "plane-curve-spectrum",
    "plane-curve-shift",
    "plane-curve-shift-engine",
    "fermat-quartic-stable",
    "fermat-quartic-jump",
    "six-variable-parity",
    "hidden-homogeneous",
    "engine-cancel-a",
    "engine-cancel-b",
    "engine-cancel-b-stretch",
    "quartic-cor1-witnesses",
    "e7-weights",
)


def verify_paper(include_engine: bool = True) -> list[AnchorResult]:
    """Run the whole battery; engine anchors become "skip" when excluded."""
    by_name: dict[str, AnchorResult] = {}
    for fn in _COMBINATORIAL:
        res = fn()
        by_name[res.name] = res
    engine_names = (
        "plane-curve-shift-engine",
        "hidden-homogeneous",
        "engine-cancel-a",
        "engine-cancel-b",
        "engine-cancel-b-stretch",
    )
    if include_engine:
        for fn in _ENGINE:
            res = fn()
            by_name[res.name] = res
    else:
        for name in engine_names:
            by_name[name] = _skip(name)
    return [by_name[name] for name in _ORDER]
