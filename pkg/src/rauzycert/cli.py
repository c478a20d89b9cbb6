"""Command-line front end.

One JSON / CSV / DOT document goes to stdout per invocation; diagnostics go
to stderr.  Exit codes: 0 for success (certified, allowed, or all checks
passing), 2 for an inconclusive certificate or failed checks, 1 for errors.
Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import diagram as diagram_mod
from . import fg as fg_mod
from . import penner as penner_mod
from .errors import RauzyError
from .induction import Move, apply_move, edge_matrix
from .jsonutil import bracket_json, decimal_str, rational_json
from .linalg import IntMatrix, min_row_sum
from .pa import certificate_to_json, certify, lc_lower_bound
from .perm import LabeledPermutation, central, fg_start, is_irreducible, parse, unlabeled
from .surface import glue, stratum_of_central


@dataclass
class RunConfig:
    tolerance: Fraction = Fraction(1, 10**9)
    enumeration_cap: int = 10**6
    reading: str = "paper"
    output: str = "json"

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.enumeration_cap <= 0:
            raise ValueError("enumeration cap must be positive")


def _tol(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational: %r" % text) from None


def _emit(document: str) -> None:
    sys.stdout.write(document)
    if not document.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj, indent=2))


def _emit_csv(header, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    _emit(buf.getvalue())


def _start_permutation(args) -> LabeledPermutation:
    if getattr(args, "central", None) is not None:
        return central(args.central)
    if getattr(args, "fg_start", None) is not None:
        return fg_start(args.fg_start)
    return parse(args.start if hasattr(args, "start") else args.perm)


def _perm_json(p: LabeledPermutation, stratum: str | None = None) -> dict:
    surface = glue(p)
    out = p.to_json_dict()
    out["display"] = p.display()
    out["unlabeled"] = list(unlabeled(p).images)
    out["irreducible"] = is_irreducible(p)
    out["surface"] = surface.to_json_dict()
    if stratum is not None:
        out["stratum"] = stratum
    return out


def _cmd_perm(args) -> int:
    stratum = stratum_of_central(args.central) if args.central is not None else None
    p = _start_permutation(args)
    if args.format == "text":
        _emit(p.display())
    else:
        _emit_json(_perm_json(p, stratum))
    return 0


def _cmd_move(args) -> int:
    p = parse(args.start)
    edge = apply_move(p, Move.from_letter(args.kind))
    _emit_json(
        {
            "kind": edge.kind.value,
            "source": edge.source.to_json_dict(),
            "target": edge.target.to_json_dict(),
            "target_display": edge.target.display(),
            "winner": edge.winner,
            "loser": edge.loser,
            "matrix": edge_matrix(edge).to_json(),
        }
    )
    return 0


def _cmd_diagram(args) -> int:
    config = RunConfig(enumeration_cap=args.cap, output=args.format)
    seed = _start_permutation(args)
    component = diagram_mod.explore(seed, augmented=args.augmented, cap=config.enumeration_cap)
    if args.format == "dot":
        _emit(diagram_mod.to_dot(component))
    else:
        out = component.to_json_dict()
        out["seed"] = seed.display()
        out["size"] = len(component)
        out["injective"] = diagram_mod.injectivity_check(component)
        _emit_json(out)
    return 0


def _cmd_path(args) -> int:
    start = parse(args.start)
    path = diagram_mod.build_path(start, args.moves, reading=args.reading)
    _emit_json(
        {
            "allowed": path.allowed,
            "input_word": args.moves,
            "reading": args.reading,
            "execution_word": path.word,
            "start": start.to_json_dict(),
            "end": path.end.to_json_dict(),
            "end_display": path.end.display(),
            "unlabeled_start": list(unlabeled(start).images),
            "unlabeled_end": list(unlabeled(path.end).images),
        }
    )
    return 0 if path.allowed else 1


def _cmd_certify(args) -> int:
    config = RunConfig(tolerance=args.tol, reading=args.reading)
    start = parse(args.start)
    path = diagram_mod.build_path(start, args.moves, reading=config.reading)
    cert = certify(path, tol=config.tolerance, lower_mode=args.lower_mode)
    out = certificate_to_json(cert)
    out["input_word"] = args.moves
    out["reading"] = config.reading
    _emit_json(out)
    return 0 if cert.primitive else 2


def _fg_report_json(report: fg_mod.FamilyReport) -> dict:
    return {
        "g": report.g,
        "start": report.path.start.to_json_dict(),
        "execution_word": report.path.word,
        "matrix": report.matrix.to_json(),
        "block_form_matches": report.block_form_matches,
        "intermediate_forms_match": report.intermediate_forms_match,
        "upper_bound": rational_json(report.upper_bound),
        "lower_bound": rational_json(report.lower_bound),
        "certificate": certificate_to_json(report.certificate),
        "checks": {k: report.checks[k] for k in sorted(report.checks)},
        "passed": report.passed,
    }


def _cmd_fg(args) -> int:
    if args.fg_mode == "table":
        rows = []
        for g in range(args.gmin, args.gmax + 1):
            report = fg_mod.family_report(g, tol=args.tol)
            cert = report.certificate
            exact = lc_lower_bound(report.path, mode="exact", matrix=report.matrix)
            rows.append(
                [
                    g,
                    decimal_str(cert.lam.low),
                    decimal_str(cert.lam.high),
                    str(cert.lc_upper),
                    str(cert.lc_lower.value),
                    str(exact.value),
                ]
            )
        _emit_csv(
            ["g", "lambda_low", "lambda_high", "lc_upper", "lc_lower_cap", "lc_lower_exact"],
            rows,
        )
        return 0
    if args.fg_mode == "central":
        report = fg_mod.central_component_checks(
            args.n, loop_len=args.loop_len, samples=args.samples
        )
        _emit_json(
            {
                "n": report.n,
                "g": report.g,
                "component_size": report.component_size,
                "lc_lower": rational_json(report.lc_lower),
                "samples": [s.to_json_dict() for s in report.samples],
                "checks": {k: report.checks[k] for k in sorted(report.checks)},
                "passed": report.passed,
            }
        )
        return 0 if report.passed else 2
    if args.genus is None:
        raise ValueError("fg needs --genus (or the table / central subcommand)")
    report = fg_mod.family_report(args.genus, tol=args.tol)
    _emit_json(_fg_report_json(report))
    return 0 if report.passed else 2


def _cmd_penner(args) -> int:
    if args.penner_mode == "sweep":
        rows = []
        for g in range(3, args.gmax + 1):
            for n in range(1, args.nmax + 1):
                report = penner_mod.stretch_bounds(g, n, tol=args.tol)
                rows.append(
                    [
                        g,
                        n,
                        decimal_str(report.rho.low),
                        decimal_str(report.rho.high),
                        report.power_min_row_sum,
                        str(penner_mod.lc_upper_rotation(g).bound),
                    ]
                )
        _emit_csv(["g", "n", "rho_low", "rho_high", "min_row_sum_power", "lc_upper"], rows)
        return 0
    if args.penner_mode == "diverge":
        report = penner_mod.diverging_sequence(args.genus, tol=args.tol)
        _emit_json(
            {
                "g": report.g,
                "n": report.n,
                "rho": bracket_json(report.rho),
                "teich_low": report.teich_low,
                "lc_upper": rational_json(report.lc_upper),
                "checks": {k: report.checks[k] for k in sorted(report.checks)},
                "passed": report.passed,
            }
        )
        return 0 if report.passed else 2
    if args.genus is None or args.n is None:
        raise ValueError("penner needs --genus and --n (or the sweep / diverge subcommand)")
    matrices = penner_mod.build(args.genus, args.n)
    report = penner_mod.stretch_bounds(args.genus, args.n, tol=args.tol)
    rotation = penner_mod.lc_upper_rotation(args.genus)
    _emit_json(
        {
            "g": args.genus,
            "n": args.n,
            "blocks": {
                "a": matrices.a.to_json(),
                "b": matrices.b.to_json(),
                "c": matrices.c.to_json(),
                "d": matrices.d.to_json(),
            },
            "matrix": matrices.m.to_json(),
            "power_identity": penner_mod.verify_power_identity(args.genus, args.n),
            "min_row_sum_power": min_row_sum(matrices.m**args.genus),
            "rho": bracket_json(report.rho),
            "teich_length": list(report.teich_length),
            "lc_upper": rational_json(rotation.bound),
            "lc_upper_orbit": list(rotation.orbit),
            "checks": {k: report.checks[k] for k in sorted(report.checks)},
            "passed": report.passed,
        }
    )
    return 0 if report.passed else 2


def _cmd_homology_check(args) -> int:
    if args.random is not None:
        rng = random.Random(args.seed)
        failures = []
        for index in range(args.random):
            d = rng.randint(1, args.dim_max)
            a = IntMatrix.from_rows(
                [[rng.randint(0, args.entry_max) for _ in range(d)] for _ in range(d)]
            )
            b = [rng.randint(0, args.entry_max) for _ in range(d)]
            n = rng.randint(1, args.n_max)
            if not penner_mod.homology_power_check(a, b, n):
                failures.append({"index": index, "a": a.to_json(), "b": b, "n": n})
        _emit_json(
            {
                "count": args.random,
                "seed": args.seed,
                "all_equal": not failures,
                "failures": failures,
            }
        )
        return 0 if not failures else 2
    if args.a is None or args.b is None or args.n is None:
        raise ValueError("homology-check needs --a, --b and --n (or --random)")
    a = IntMatrix.from_rows(json.loads(args.a))
    b = [int(x) for x in json.loads(args.b)]
    equal = penner_mod.homology_power_check(a, b, args.n)
    _emit_json({"dim": a.order, "n": args.n, "equal": equal})
    return 0 if equal else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rauzycert",
        description="Rauzy-Veech induction, pseudo-Anosov certification and "
        "translation-length bounds on labeled permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("perm", help="parse or construct a labeled permutation")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--perm", help='two-row literal, e.g. "A B C / C B A"')
    source.add_argument("--central", type=int, help="central permutation on N letters")
    source.add_argument("--fg-start", dest="fg_start", type=int, help="family start at genus G")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_perm)

    p = sub.add_parser("move", help="apply a single move")
    p.add_argument("--start", required=True)
    p.add_argument("--kind", required=True, choices=["t", "b", "f"])
    p.set_defaults(func=_cmd_move)

    p = sub.add_parser("diagram", help="enumerate a diagram component")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--start")
    source.add_argument("--central", type=int)
    p.add_argument("--augmented", action="store_true", help="include flip edges")
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=_cmd_diagram, fg_start=None)

    p = sub.add_parser("path", help="build a move path and test if it is allowed")
    p.add_argument("--start", required=True)
    p.add_argument("--moves", required=True)
    p.add_argument("--reading", choices=["paper", "ltr"], default="paper")
    p.set_defaults(func=_cmd_path)

    p = sub.add_parser("certify", help="certify the mapping class of an allowed path")
    p.add_argument("--start", required=True)
    p.add_argument("--moves", required=True)
    p.add_argument("--reading", choices=["paper", "ltr"], default="paper")
    p.add_argument("--tol", type=_tol, default=Fraction(1, 10**9))
    p.add_argument("--lower-mode", dest="lower_mode", choices=["diagonal_cap", "exact"],
                   default="diagonal_cap")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("fg", help="minimal-stretch family reports")
    p.add_argument("--genus", type=int)
    p.add_argument("--tol", type=_tol, default=Fraction(1, 10**9))
    fg_sub = p.add_subparsers(dest="fg_mode")
    table = fg_sub.add_parser("table", help="CSV over a genus range")
    table.add_argument("--gmin", type=int, default=2)
    table.add_argument("--gmax", type=int, default=10)
    table.add_argument("--tol", type=_tol, default=Fraction(1, 10**9))
    central_checks = fg_sub.add_parser(
        "central", help="central-component structural checks"
    )
    central_checks.add_argument("--n", type=int, required=True)
    central_checks.add_argument("--loop-len", dest="loop_len", type=int, default=None)
    central_checks.add_argument("--samples", type=int, default=3)
    p.set_defaults(func=_cmd_fg, fg_mode=None)

    p = sub.add_parser("penner", help="twist-family matrix reports")
    p.add_argument("--genus", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--tol", type=_tol, default=Fraction(1, 10**9))
    penner_sub = p.add_subparsers(dest="penner_mode")
    sweep = penner_sub.add_parser("sweep", help="CSV over a (g, n) grid")
    sweep.add_argument("--gmax", type=int, default=6)
    sweep.add_argument("--nmax", type=int, default=20)
    sweep.add_argument("--tol", type=_tol, default=Fraction(1, 10**9))
    diverge = penner_sub.add_parser("diverge", help="the n = g^g member")
    diverge.add_argument("--genus", type=int, required=True)
    diverge.add_argument("--tol", type=_tol, default=Fraction(1, 10**9))
    p.set_defaults(func=_cmd_penner, penner_mode=None)

    p = sub.add_parser("homology-check", help="block-triangular homology power identity")
    p.add_argument("--a", help="square matrix as a JSON array of rows")
    p.add_argument("--b", help="row vector as a JSON array")
    p.add_argument("--n", type=int)
    p.add_argument("--random", type=int, help="check COUNT random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim-max", dest="dim_max", type=int, default=4)
    p.add_argument("--entry-max", dest="entry_max", type=int, default=5)
    p.add_argument("--n-max", dest="n_max", type=int, default=10)
    p.set_defaults(func=_cmd_homology_check)

    return parser


_ERROR_PREFIXES = (
    ("PermutationParseError", "parse error"),
    ("ReducibleError", "reducible error"),
    ("NotAllowedError", "path error"),
    ("NotPrimitiveError", "matrix error"),
    ("EnumerationCapError", "cap error"),
    ("ConvergenceError", "convergence error"),
)


def _error_prefix(exc: Exception) -> str:
    for name, prefix in _ERROR_PREFIXES:
        if type(exc).__name__ == name:
            return prefix
    return "error"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RauzyError, ValueError, json.JSONDecodeError) as exc:
        print("%s: %s" % (_error_prefix(exc), exc), file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
