"""Command-line front end: per-knot reports, suites, canonical JSON.

Exit codes follow the report statuses: 0 when every report passes, 1 when
any fails, 2 on usage errors.  JSON output is a single document with
sorted keys and two-space indentation, so re-serializing a parsed
document reproduces it byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .pretzel import (PretzelKnot, TRACE_WORD_BOUND, WITNESS_BOUND,
                      closed_form_report, defining_p, defining_q,
                      pq_resultant, radical_slice_report, resultant_report,
                      seidenberg_report, witness_reports, x0_report, x0_slice)
from .qtorus import alpha_unknot, epsilon_eval, sigma_symmetry_factor
from .report import all_passed, sort_reports
from .sl2trace import (DEFAULT_SEED, trace_poly, word_from_string,
                       word_to_string)
from .twobridge import (TwoBridgeKnot, character_polynomial,
                        character_polynomial_even, irreducibility_certificate,
                        leading_term_report, structural_reports)
from . import verify

RESULTANT_CLI_BOUND = 8


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit one JSON document on stdout")
    common.add_argument("--tol", type=float, default=1e-9,
                        help="tolerance for numeric residual checks")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for the random oracles")

    parser = argparse.ArgumentParser(
        prog="knotpoly",
        description="Exact character-variety and recurrence checks for "
                    "two-bridge and pretzel knots.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    tb = sub.add_parser("twobridge", parents=[common],
                        help="per-knot report for b(p, m)")
    tb.add_argument("--p", type=int, required=True)
    tb.add_argument("--m", type=int, required=True)

    pz = sub.add_parser("pretzel", parents=[common],
                        help="per-knot report for the (-2,3,2n+1) pretzel")
    pz.add_argument("--n", type=int, required=True)

    qt = sub.add_parser("qtorus", parents=[common],
                        help="quantum-torus demonstration for the unknot")
    qt.add_argument("action", nargs="?", choices=["demo-unknot"],
                    default="demo-unknot")
    qt.add_argument("--n-range", type=int, nargs=2, metavar=("A", "B"),
                    help="annihilation window (default -20 20)")

    tr = sub.add_parser("trace", parents=[common],
                        help="trace polynomial of a two-generator word")
    tr.add_argument("--word", required=True,
                    help='word such as "a b^-1"')

    vf = sub.add_parser("verify", parents=[common],
                        help="run a verification suite")
    vf.add_argument("--suite", default="all",
                    choices=["all", "twobridge", "pretzel", "qtorus"])
    vf.add_argument("--n-range", type=int, nargs=2, metavar=("A", "B"),
                    help="pretzel parameter range override")
    vf.add_argument("--p", type=int, default=None,
                    help="two-bridge p cap override")
    return parser


def _run_twobridge(args):
    knot = TwoBridgeKnot(args.p, args.m)
    phi = character_polynomial(knot)
    gamma = character_polynomial_even(knot)
    payload = {
        "phi": phi.to_text(),
        "gamma": gamma.to_text(),
        "z_degree": knot.d,
        "irreducibility": irreducibility_certificate(knot).value,
    }
    reports = structural_reports(knot) + [leading_term_report(knot)]
    return knot.label(), payload, reports


def _run_pretzel(args):
    n = args.n
    knot = PretzelKnot(n)
    reports = [x0_report(n), seidenberg_report(n, tol=args.tol)]
    if abs(n) <= TRACE_WORD_BOUND:
        reports.append(closed_form_report(n))
    if n in (0, 1, 2):
        reports.append(radical_slice_report(n))
    if abs(n) <= WITNESS_BOUND:
        reports.extend(witness_reports(n))
    data = x0_slice(n)
    payload = {
        "p": defining_p().to_text(),
        "q_n": defining_q(n).to_text(),
        "x0": {"a_n": data.a_n.to_text(), "b_n": data.b_n.to_text(),
               "u_n": data.u_n.to_text()},
    }
    if abs(n) <= RESULTANT_CLI_BOUND:
        payload["resultant"] = pq_resultant(n).to_text()
        reports.append(resultant_report(n))
    return knot.label(), payload, reports


def _run_qtorus(args):
    window = tuple(args.n_range) if args.n_range else verify.QT_WINDOW
    reports = verify.unknot_reports(window)
    by_claim = {r.claim_id: r for r in reports}
    alpha = alpha_unknot()
    factor = sigma_symmetry_factor(alpha)
    shape = by_claim["aj-shape-unknot"].details
    payload = {
        "alpha": alpha.to_text(),
        "epsilon_alpha": epsilon_eval(alpha).to_text(),
        "aj_unknot": {"quotient_by_l_minus_1": shape["quotient_by_l_minus_1"],
                      "m_only": shape["m_only"]},
        "sigma_factor": factor.as_dict() if factor else None,
    }
    return "unknot", payload, reports


def _run_trace(args):
    word, names = word_from_string(args.word)
    names = tuple(names) + ("a", "b")[len(names):]
    payload = {
        "word": word_to_string(word, names),
        "trace": trace_poly(word).to_text(),
    }
    return payload["word"], payload, []


def _run_verify(args):
    n_range = tuple(args.n_range) if args.n_range else None
    p_max = args.p if args.p else verify.TWOBRIDGE_P_MAX
    if args.suite == "twobridge":
        reports = verify.suite_twobridge(p_max)
    elif args.suite == "pretzel":
        reports = verify.suite_pretzel(n_range, args.tol)
    elif args.suite == "qtorus":
        reports = verify.suite_qtorus(args.seed)
    else:
        reports = verify.suite_all(n_range, p_max, args.seed, args.tol)
    return f"suite:{args.suite}", {"suite": args.suite}, reports


_DISPATCH = {
    "twobridge": _run_twobridge,
    "pretzel": _run_pretzel,
    "qtorus": _run_qtorus,
    "trace": _run_trace,
    "verify": _run_verify,
}


def render_json(subject: str, payload: dict, reports) -> str:
    doc = {"tool_version": __version__, "subject": subject, **payload,
           "reports": [r.as_dict() for r in sort_reports(reports)]}
    return json.dumps(doc, indent=2, sort_keys=True)


def _render_table(subject: str, payload: dict, reports) -> str:
    lines = [subject]
    for key, value in payload.items():
        if isinstance(value, dict):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"  {key}: {value}")
    ordered = sort_reports(reports)
    if ordered:
        lines.append("")
        width = max(len(r.claim_id) for r in ordered)
        for r in ordered:
            lines.append(f"  {r.status:<12} {r.claim_id:<{width}} {r.subject}")
        failing = sum(1 for r in ordered if not r.passed)
        lines.append("")
        lines.append(f"  {len(ordered)} reports, {failing} failing")
    return "\n".join(lines)


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else exc.code
    try:
        subject, payload, reports = _DISPATCH[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(render_json(subject, payload, reports))
    elif args.command == "trace":
        print(payload["trace"])
    else:
        print(_render_table(subject, payload, reports))
    return 0 if all_passed(reports) else 1


if __name__ == "__main__":
    sys.exit(main())
