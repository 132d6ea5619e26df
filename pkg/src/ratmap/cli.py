"""Command-line interface.

Exit codes: 0 success, 1 selftest failure, 2 malformed input, 3 the
even-cell hypothesis is not met, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks
from .graded import free_gca_hilbert
from .mapping import (
    EvenCellHypothesisError,
    InternalInvariantError,
    component_cohomology,
    hodge_tate_table,
    homotopy_ranks,
    poincare_series,
    thom_factorization,
)
from .space import SpaceSpecError, parse_space
from .weyl import GroupSpecError, parse_group, render_group

FORMAT_VERSION = 1

EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3
EXIT_INTERNAL = 4

COMMANDS = ("series", "factors", "homotopy", "cohomology", "hodge", "selftest")


def _weight(w: Fraction):
    return w.numerator if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


def _factor_dict(f):
    return {"rank": f.rank, "degree": f.degree, "q": f.q, "n": f.n}


def _generator_dict(g):
    return {"degree": g.degree, "parity": g.parity, "multiplicity": g.multiplicity, "twist": g.twist}


def compute(command, group, space, max_degree, conjectural=False, assume_even_cells=False):
    """Run one command and return ``(payload, text_lines)``."""
    n = max_degree
    if command == "series":
        s = poincare_series(space, group, n)
        lines = [f"P_t(Map({space.label}, B{render_group(group)})) = {s}"]
        lines += [f"  t^{k}: {c}" for k, c in enumerate(s.coeffs)]
        return {"coefficients": list(s.coeffs)}, lines

    if command == "factors":
        fac = thom_factorization(space, group)
        lines = ["positive-degree factors (q, n_i):"]
        lines += [f"  {f}  from (q={f.q}, n_i={f.n})" for f in fac.positive_factors]
        lines.append("degree-zero factors (discrete, affect components only):")
        lines += [f"  {f}  from (q={f.q}, n_i={f.n})" for f in fac.degree_zero_factors] or ["  none"]
        payload = {
            "positive": [_factor_dict(f) for f in fac.positive_factors],
            "degree_zero": [_factor_dict(f) for f in fac.degree_zero_factors],
        }
        return payload, lines

    if command == "homotopy":
        ranks = [(k, homotopy_ranks(space, group, k)) for k in range(1, n + 1)]
        lines = ["k  rank pi_k (x) Q"] + [f"{k:<3}{r}" for k, r in ranks]
        return {"ranks": [{"k": k, "rank": r} for k, r in ranks]}, lines

    if command == "cohomology":
        gs = component_cohomology(space, group, conjectural, assume_even_cells)
        h = free_gca_hilbert(gs, n)
        lines = ["degree  parity  multiplicity  twist"]
        lines += [
            f"{g.degree:<8}{g.parity:<8}{g.multiplicity:<14}{'-' if g.twist is None else g.twist}"
            for g in gs
        ]
        if gs.conjectural:
            lines.append("(conjectural presentation)")
        lines.append(f"Hilbert series: {h}")
        payload = {
            "generators": [_generator_dict(g) for g in gs],
            "hilbert_series": list(h.coeffs),
        }
        return payload, lines

    if command == "hodge":
        gs = component_cohomology(space, group, conjectural, assume_even_cells)
        table = hodge_tate_table(gs, n)
        lines = ["degree  weight  dimension"]
        lines += [f"{r.degree:<8}{str(_weight(r.weight)):<8}{r.dimension}" for r in table]
        if table.conjectural:
            lines.append("(conjectural: Hodge-Tate property not proven for this input)")
        payload = {
            "conjectural": table.conjectural,
            "rows": [
                {"degree": r.degree, "weight": _weight(r.weight), "dimension": r.dimension}
                for r in table
            ],
        }
        return payload, lines

    raise ValueError(f"unknown command {command!r}")


def _selftest():
    results = checks.run_all()
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.seconds:.2f}s)"
        + ("" if r.passed else f"\n      {r.detail}")
        for r in results
    ]
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    payload = {
        "passed": ok,
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }
    return ok, payload, lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratmap",
        description="Rational homotopy invariants of Map(X, BG) for semisimple G.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "machine"), default="text")
    engine = argparse.ArgumentParser(add_help=False)
    engine.add_argument("--group", required=True, help="e.g. A1, G2, A2xG2")
    engine.add_argument(
        "--space",
        required=True,
        help="point | sphere:m | curve:g | proj:k | hyp:k,d | betti:b0,b1,... | prod(S;S)",
    )
    engine.add_argument("--max-degree", type=int, default=20, dest="max_degree")
    engine.add_argument(
        "--assume-even-cells",
        action="store_true",
        help="treat X as having an even-cell CW structure",
    )
    engine.add_argument(
        "--conjectural",
        action="store_true",
        help="include odd generators (conjectural beyond the even-cell case)",
    )
    helps = {
        "series": "Poincare series coefficients",
        "factors": "Eilenberg-MacLane factors",
        "homotopy": "ranks of rational homotopy groups",
        "cohomology": "free generators of the cohomology of a component",
        "hodge": "Hodge-Tate weight table",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[engine, common], help=text)
    sub.add_parser("selftest", parents=[common], help="run invariant and acceptance suites")
    return parser


def _render(args, payload, lines, group_text=None, space_text=None) -> str:
    if args.output == "machine":
        doc = {
            "format_version": FORMAT_VERSION,
            "command": args.command,
            "group": group_text,
            "space": space_text,
            "max_degree": getattr(args, "max_degree", None),
            "conjectural": getattr(args, "conjectural", False),
            "payload": payload,
        }
        return json.dumps(doc, indent=2)
    return "\n".join(lines)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "selftest":
        ok, payload, lines = _selftest()
        print(_render(args, payload, lines))
        return EXIT_OK if ok else EXIT_SELFTEST_FAILED

    if args.max_degree < 0:
        print("error: --max-degree must be non-negative", file=sys.stderr)
        return EXIT_PARSE
    try:
        group = parse_group(args.group)
        space = parse_space(args.space)
    except (GroupSpecError, SpaceSpecError) as exc:
        print(f"error: {exc} [token: {exc.token!r}]", file=sys.stderr)
        return EXIT_PARSE

    try:
        payload, lines = compute(
            args.command, group, space, args.max_degree, args.conjectural, args.assume_even_cells
        )
    except EvenCellHypothesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    print(_render(args, payload, lines, render_group(group), space.label))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
