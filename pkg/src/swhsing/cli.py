"""Command-line front end: exact JSON/TSV reports, batch runner, figures.

Every result is computed exactly and serialized with rationals as
"p/q" strings; output is deterministic byte-for-byte for a given
invocation, including across `batch --jobs N` settings.  Exit codes:
0 success, 1 verification-battery failure or internal disagreement,
2 invalid input, 3 computation path unavailable, 4 cutoff or capacity
exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import anchors as _anchors
from . import shifts as _shifts
from . import witnesses as _witnesses
from .length import length as _length_report
from .length import length_table as _length_table
from .spectrum import spectrum as _spectrum_of
from .model import (
    CutoffExhaustedError,
    NonlinearDependenceError,
    OracleDisagreementError,
    PathUnavailableError,
    SWHSingularity,
    ValidationError,
    rational_from_string,
    rational_to_string,
)

CLI_ENTRIES_CAP = 100_000
FIGURE_CLASS_CAP = 10_000

_ERROR_CODES = (
    (ValidationError, "validation", 2),
    (PathUnavailableError, "path-unavailable", 3),
    (NonlinearDependenceError, "nonlinear-dependence", 3),
    (CutoffExhaustedError, "cutoff-exhausted", 4),
    (OracleDisagreementError, "disagreement", 1),
)


# -- input parsing -------------------------------------------------------------


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValidationError(f"cannot parse {what} {text!r}") from exc


def _parse_pert(text: str) -> tuple[tuple[int, ...], Fraction]:
    body, sep, coeff = text.partition(":")
    mono = _parse_int_list(body, "perturbation monomial")
    return mono, rational_from_string(coeff) if sep else Fraction(1)


def _singularity_from_args(args: argparse.Namespace) -> SWHSingularity:
    if not args.exponents:
        raise ValidationError("missing --exponents")
    return SWHSingularity(
        exponents=_parse_int_list(args.exponents, "exponents"),
        coefficients=tuple(
            rational_from_string(c) for c in args.coefficients.split(",")
        )
        if args.coefficients
        else (),
        perturbation=tuple(_parse_pert(p) for p in args.perturbation or ()),
    )


def _singularity_from_job(data: dict) -> SWHSingularity:
    return SWHSingularity.from_json_dict(
        {
            key: data[key]
            for key in ("exponents", "coefficients", "perturbation")
            if key in data
        }
    )


# -- command implementations ---------------------------------------------------


def _shift_rows(s: SWHSingularity, engine_mode: str):
    """(nu, degree, shift) rows plus a path label, choosing the applicable path."""
    if s.is_weighted_homogeneous:
        return [], "weighted-homogeneous"
    if len(s.perturbation) == 1:
        return _shifts.shifted_entries(s), "combinatorial"
    if engine_mode == "off":
        raise PathUnavailableError(
            "several perturbation terms: the expansion engine is required "
            "(drop --no-engine)"
        )
    from .engine import GaussManinEngine

    eng = GaussManinEngine(s)
    rows = [
        (nu, s.unshifted_degree(nu), r) for nu, r in eng.shift_table().items()
    ]
    rows.sort(key=lambda row: (row[1], row[0]))
    return rows, "engine"


def cmd_spectrum(s: SWHSingularity) -> dict:
    sp = _spectrum_of(s)
    out = {
        "singularity": s.to_json_dict(),
        "mu": sp.mu,
        "min_alpha": rational_to_string(sp.min_alpha),
        "max_alpha": rational_to_string(sp.max_alpha),
        "pg": sp.geometric_genus,
        "reduced_genus": sp.reduced_genus,
        "distinct": sp.distinct_count,
        "integral_entries": [
            {"alpha": str(k), "mult": m}
            for k, m in sorted(sp.integral_multiplicities().items())
        ],
    }
    if sp.distinct_count <= CLI_ENTRIES_CAP:
        out["entries"] = [
            {"alpha": rational_to_string(a), "mult": m} for a, m in sp.items()
        ]
    else:
        out["entries_omitted"] = True
    return out


def cmd_bs_roots(s: SWHSingularity, engine_mode: str) -> dict:
    rows, path = _shift_rows(s, engine_mode)
    if s.is_weighted_homogeneous:
        exponents = sorted(_spectrum_of(s).support())
    else:
        exponents = sorted({deg - r for _, deg, r in rows})
    return {
        "singularity": s.to_json_dict(),
        "path": path,
        "shifted": [
            {"nu": list(nu), "alpha": rational_to_string(deg), "r": r}
            for nu, deg, r in rows
            if r
        ],
        "root_exponents": [rational_to_string(a) for a in exponents],
    }


def cmd_length(s: SWHSingularity, data: dict) -> dict:
    engine_mode = data.get("engine", "auto")
    if "alpha_min" in data or "alpha_max" in data:
        if "alpha_min" not in data or "alpha_max" not in data:
            raise ValidationError("table mode needs both alpha_min and alpha_max")
        reports = _length_table(
            s,
            rational_from_string(data["alpha_min"]),
            rational_from_string(data["alpha_max"]),
            engine=engine_mode,
        )
        return {
            "singularity": s.to_json_dict(),
            "table": [r.to_json_dict() for r in reports],
        }
    if "alpha" not in data:
        raise ValidationError('length needs "alpha" (or a table range)')
    report = _length_report(
        s, rational_from_string(data["alpha"]), engine=engine_mode
    )
    return {"singularity": s.to_json_dict(), **report.to_json_dict()}


def cmd_quotient_length(s: SWHSingularity, data: dict) -> dict:
    if "alpha" not in data:
        raise ValidationError('quotient-length needs "alpha"')
    alpha = rational_from_string(data["alpha"])
    engine_mode = data.get("engine", "auto")
    hi = _length_report(s, alpha, engine=engine_mode)
    lo = _length_report(s, alpha - 1, engine=engine_mode)
    return {
        "singularity": s.to_json_dict(),
        "alpha": rational_to_string(alpha),
        "quotient_length": hi.length - lo.length,
        "length": hi.length,
        "length_minus_one": lo.length,
    }


def cmd_check_thm2(s: SWHSingularity, data: dict) -> dict:
    if "alpha" not in data:
        raise ValidationError('check-thm2 needs "alpha"')
    alpha = rational_from_string(data["alpha"])
    out = {
        "singularity": s.to_json_dict(),
        "condition_i": _witnesses.check_thm2_i(s, alpha).to_json_dict(),
    }
    if data.get("r") is not None:
        r = data["r"]
        if not isinstance(r, int) or isinstance(r, bool) or r < 1:
            raise ValidationError(f'"r" must be a positive integer, got {r!r}')
        wit = _witnesses.check_thm2_ii(s, alpha, r)
        out["condition_ii"] = wit.to_json_dict() if wit else None
    return out


def cmd_search_cor1(data: dict) -> dict:
    for key in ("n", "d"):
        value = data.get(key)
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValidationError(f'search-cor1 needs integer "{key}"')
    n, d = data["n"], data["d"]
    try:
        m_ii, m_i = _witnesses.corollary1_witness(n, d)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    return {
        "n": n,
        "d": d,
        "monomial_ii": list(m_ii),
        "degree_ii": 2 * d - n,
        "monomial_i": list(m_i),
        "degree_i": 2 * d - n + 1,
    }


def cmd_expand(s: SWHSingularity, data: dict) -> dict:
    from .engine import GaussManinEngine

    if "m" not in data:
        raise ValidationError('expand needs a monomial "m"')
    m = tuple(data["m"])
    if len(m) != s.n or any(
        not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in m
    ):
        raise ValidationError(f'"m" must be {s.n} nonnegative integers')
    k = data.get("k", 0)
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValidationError(f'"k" must be a nonnegative integer, got {k!r}')
    cutoff = (
        rational_from_string(data["cutoff"]) if data.get("cutoff") is not None else None
    )
    eng = GaussManinEngine(s, cutoff=cutoff)
    by_degree = eng.components_by_degree(m, k)
    return {
        "singularity": s.to_json_dict(),
        "m": list(m),
        "k": k,
        "cutoff": rational_to_string(eng.cutoff),
        "components": [
            {
                "alpha": rational_to_string(deg),
                "terms": [
                    {
                        "nu": list(sym),
                        "k": kk,
                        "coeff": rational_to_string(coeff),
                    }
                    for (sym, kk), coeff in sorted(component.items())
                ],
            }
            for deg, component in sorted(by_degree.items())
        ],
    }


def cmd_verify_paper(include_engine: bool) -> dict:
    results = _anchors.verify_paper(include_engine=include_engine)
    counts: dict[str, int] = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    return {
        "anchors": [r.to_json_dict() for r in results],
        "counts": dict(sorted(counts.items())),
        "all_pass": all(r.status != "fail" for r in results),
    }


# -- job dispatch ---------------------------------------------------------------

_COMMANDS = (
    "spectrum",
    "bs-roots",
    "length",
    "quotient-length",
    "check-thm2",
    "search-cor1",
    "expand",
    "verify-paper",
)


def execute_job(data: dict) -> dict:
    """Run one JobSpec dict (flat singularity fields + "command" + params)."""
    if not isinstance(data, dict):
        raise ValidationError("job must be a JSON object")
    command = data.get("command")
    if command not in _COMMANDS:
        raise ValidationError(
            f'unknown command {command!r}; expected one of {", ".join(_COMMANDS)}'
        )
    if command == "search-cor1":
        return cmd_search_cor1(data)
    if command == "verify-paper":
        return cmd_verify_paper(bool(data.get("include_engine", True)))
    s = _singularity_from_job(data)
    if command == "spectrum":
        return cmd_spectrum(s)
    if command == "bs-roots":
        return cmd_bs_roots(s, data.get("engine", "auto"))
    if command == "length":
        return cmd_length(s, data)
    if command == "quotient-length":
        return cmd_quotient_length(s, data)
    if command == "check-thm2":
        return cmd_check_thm2(s, data)
    return cmd_expand(s, data)


def _error_payload(exc: Exception) -> tuple[dict, int]:
    for etype, name, code in _ERROR_CODES:
        if isinstance(exc, etype):
            return {"error": {"type": name, "message": str(exc)}}, code
    raise exc


def _run_job_line(line: str) -> tuple[dict, int]:
    try:
        data = json.loads(line)
    except json.JSONDecodeError as exc:
        return {"error": {"type": "validation", "message": f"bad JSON: {exc}"}}, 2
    try:
        return execute_job(data), 0
    except Exception as exc:  # noqa: BLE001 - mapped to typed payloads
        return _error_payload(exc)


# -- TSV rendering --------------------------------------------------------------


def _tsv(command: str, result: dict) -> str:
    rows: list[list[object]]
    if command == "spectrum":
        pairs = result.get("entries", result["integral_entries"])
        rows = [["alpha", "mult"]] + [[e["alpha"], e["mult"]] for e in pairs]
    elif command == "bs-roots":
        rows = [["exponent"]] + [[a] for a in result["root_exponents"]]
    elif command == "length":
        header = [
            "alpha", "nu_tilde", "branch_count", "delta_tilde", "length",
            "provenance",
        ]
        reports = result["table"] if "table" in result else [result]
        rows = [header] + [[r[k] for k in header] for r in reports]
    elif command == "quotient-length":
        rows = [
            ["alpha", "quotient_length"],
            [result["alpha"], result["quotient_length"]],
        ]
    elif command == "check-thm2":
        rows = [["check", "result", "detail"]]
        ci = result["condition_i"]
        rows.append(
            ["condition-i", "holds" if ci["holds"] else "fails", f"bound={ci['bound']}"]
        )
        if "condition_ii" in result:
            wit = result["condition_ii"]
            if wit is None:
                rows.append(["condition-ii", "no-witness", ""])
            else:
                h = ",".join(str(v) for v in wit["h"])
                rows.append(["condition-ii", wit["kind"], f"r={wit['r']} h={h}"])
    elif command == "search-cor1":
        rows = [
            ["kind", "degree", "monomial"],
            [
                "condition-ii",
                result["degree_ii"],
                ",".join(str(v) for v in result["monomial_ii"]),
            ],
            [
                "condition-i",
                result["degree_i"],
                ",".join(str(v) for v in result["monomial_i"]),
            ],
        ]
    elif command == "expand":
        rows = [["alpha", "nu", "k", "coeff"]]
        for comp in result["components"]:
            for term in comp["terms"]:
                rows.append(
                    [
                        comp["alpha"],
                        ",".join(str(v) for v in term["nu"]),
                        term["k"],
                        term["coeff"],
                    ]
                )
    elif command == "verify-paper":
        rows = [["anchor", "status", "failed_checks"]]
        for anchor in result["anchors"]:
            failed = sum(1 for c in anchor["checks"] if not c["ok"])
            rows.append([anchor["name"], anchor["status"], failed])
    else:
        raise ValidationError(f"no TSV form for {command!r}")
    return "".join("\t".join(str(v) for v in row) + "\n" for row in rows)


# -- figures --------------------------------------------------------------------


def _render_figures(command: str, s, result: dict, out_dir: str) -> list[str]:
    import os

    from . import figures as _figures

    os.makedirs(out_dir, exist_ok=True)
    if command == "spectrum":
        return [_figures.render_spectrum(_spectrum_of(s), out_dir)]
    if command == "bs-roots":
        if s.is_weighted_homogeneous or s.milnor_number > FIGURE_CLASS_CAP:
            rows = []
        else:
            rows, _ = _shift_rows(s, "auto")
        if not rows:
            rows = [
                (None, Fraction(a), 0) for a in result["root_exponents"]
            ]
        return [_figures.render_roots(s, rows, out_dir)]
    if command == "verify-paper":
        results = _anchors.verify_paper(
            include_engine=not result["counts"].get("skip")
        )
        return [_figures.render_anchors(results, out_dir)]
    raise ValidationError(f"--figures does not apply to {command!r}")


# -- argument parser ------------------------------------------------------------


def _add_singularity_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--exponents", "-e", required=True,
        help="principal-part exponents, e.g. 6,5",
    )
    p.add_argument(
        "--coefficients", "-c", default=None,
        help="principal-part coefficients, e.g. 1/7,1/5 (default: all 1)",
    )
    p.add_argument(
        "--perturbation", "-p", action="append", default=[],
        metavar="M[:C]",
        help="higher-order term, monomial:coefficient, e.g. 2,4:1 (repeatable)",
    )


def _add_format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "tsv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swhsing",
        description=(
            "Exact invariants of semi-weighted-homogeneous isolated "
            "singularities: spectra, saturation shifts, module lengths."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("spectrum", help="spectral numbers with multiplicities")
    _add_singularity_args(p)
    _add_format_arg(p)
    p.add_argument("--figures", metavar="DIR", help="also render PNG figures")

    p = sub.add_parser(
        "bs-roots", help="reduced root exponents after saturation shifts"
    )
    _add_singularity_args(p)
    _add_format_arg(p)
    p.add_argument("--figures", metavar="DIR", help="also render PNG figures")
    p.add_argument(
        "--no-engine", action="store_true",
        help="fail instead of using the expansion engine",
    )

    p = sub.add_parser("length", help="composition-series length at alpha")
    _add_singularity_args(p)
    _add_format_arg(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--alpha", help="exponent, e.g. 19/30")
    group.add_argument(
        "--table", nargs=2, metavar=("MIN", "MAX"),
        help="all spectral-coset exponents in [MIN, MAX]",
    )
    p.add_argument("--no-engine", action="store_true")

    p = sub.add_parser(
        "quotient-length", help="length at alpha minus length at alpha-1"
    )
    _add_singularity_args(p)
    _add_format_arg(p)
    p.add_argument("--alpha", required=True)
    p.add_argument("--no-engine", action="store_true")

    p = sub.add_parser(
        "check-thm2", help="stability bound and level-r monomial witness"
    )
    _add_singularity_args(p)
    _add_format_arg(p)
    p.add_argument("--alpha", required=True)
    p.add_argument("--r", type=int, help="witness level (condition ii)")

    p = sub.add_parser(
        "search-cor1", help="perturbation monomials for the Fermat family"
    )
    _add_format_arg(p)
    p.add_argument("--n", type=int, required=True, help="number of variables")
    p.add_argument("--d", type=int, required=True, help="Fermat exponent")

    p = sub.add_parser("expand", help="expansion components of one class")
    _add_singularity_args(p)
    _add_format_arg(p)
    p.add_argument("--monomial", "-m", required=True, help="class monomial, e.g. 0,0")
    p.add_argument("--k", type=int, default=0, help="derivative power (default 0)")
    p.add_argument("--cutoff", help="degree cutoff (default: highest class degree)")

    p = sub.add_parser("verify-paper", help="run the built-in anchor battery")
    _add_format_arg(p)
    p.add_argument("--figures", metavar="DIR", help="also render PNG figures")
    p.add_argument(
        "--no-engine", action="store_true", help="skip engine-backed anchors"
    )

    p = sub.add_parser("run", help="run one JSON job from stdin or a file")
    p.add_argument("--file", help="job file (default: stdin)")
    _add_format_arg(p)

    p = sub.add_parser(
        "batch", help="run newline-delimited JSON jobs from stdin"
    )
    p.add_argument(
        "--jobs", type=int, default=1, metavar="N",
        help="worker threads (output order is input order regardless)",
    )

    return parser


def _job_from_args(args: argparse.Namespace) -> dict:
    """Translate argv options into the JobSpec dict the executor expects."""
    data: dict = {"command": args.subcommand}
    if getattr(args, "exponents", None) is not None:
        s = _singularity_from_args(args)
        data.update(s.to_json_dict())
    if getattr(args, "alpha", None) is not None:
        data["alpha"] = args.alpha
    if getattr(args, "table", None):
        data["alpha_min"], data["alpha_max"] = args.table
    if getattr(args, "r", None) is not None:
        data["r"] = args.r
    if getattr(args, "no_engine", False):
        if args.subcommand == "verify-paper":
            data["include_engine"] = False
        else:
            data["engine"] = "off"
    if getattr(args, "n", None) is not None:
        data["n"] = args.n
    if getattr(args, "d", None) is not None:
        data["d"] = args.d
    if getattr(args, "monomial", None) is not None:
        data["m"] = list(_parse_int_list(args.monomial, "monomial"))
        data["k"] = args.k
        if args.cutoff is not None:
            data["cutoff"] = args.cutoff
    return data


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.subcommand == "batch":
        lines = [line for line in sys.stdin.read().splitlines() if line.strip()]
        if args.jobs < 1:
            print(
                json.dumps(
                    {"error": {"type": "validation", "message": "--jobs must be >= 1"}}
                )
            )
            return 2
        if args.jobs == 1:
            outcomes = [_run_job_line(line) for line in lines]
        else:
            with ThreadPoolExecutor(max_workers=args.jobs) as pool:
                outcomes = list(pool.map(_run_job_line, lines))
        status = 0
        for result, code in outcomes:
            print(json.dumps(result, separators=(",", ":")))
            if code and not status:
                status = code
        return status

    if args.subcommand == "run":
        if args.file:
            try:
                with open(args.file, encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as exc:
                print(
                    json.dumps(
                        {"error": {"type": "validation", "message": str(exc)}},
                        indent=2,
                    )
                )
                return 2
        else:
            text = sys.stdin.read()
        result, code = _run_job_line(text)
        command = None
        try:
            command = json.loads(text).get("command")
        except (json.JSONDecodeError, AttributeError):
            pass
        if code == 0 and args.format == "tsv" and command:
            sys.stdout.write(_tsv(command, result))
        else:
            print(json.dumps(result, indent=2))
        if code == 0 and command == "verify-paper" and not result["all_pass"]:
            return 1
        return code

    try:
        data = _job_from_args(args)
        result = execute_job(data)
    except Exception as exc:  # noqa: BLE001 - mapped to typed payloads
        payload, code = _error_payload(exc)
        print(json.dumps(payload, indent=2))
        return code

    figures_dir = getattr(args, "figures", None)
    if figures_dir:
        s = (
            _singularity_from_job(data)
            if "exponents" in data
            else None
        )
        try:
            paths = _render_figures(args.subcommand, s, result, figures_dir)
        except Exception as exc:  # noqa: BLE001 - mapped to typed payloads
            payload, code = _error_payload(exc)
            print(json.dumps(payload, indent=2))
            return code
        result["figures"] = paths

    if args.format == "tsv":
        sys.stdout.write(_tsv(args.subcommand, result))
    else:
        print(json.dumps(result, indent=2))
    if args.subcommand == "verify-paper" and not result["all_pass"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
