"""``odesym`` command line.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 degenerate equation.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import audit
from .detsys import DEFAULT_DEGREE, monomial_content, verify
from .liealg import bracket
from .parse import DegenerateError, ParseError, format_field, parse_field, parse_ode, print_canonical

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DEGENERATE = 0, 1, 2, 3


def _err(msg: str) -> None:
    print(f"odesym: {msg}", file=sys.stderr)


def _warn_reducible(ode_text: str) -> None:
    ode = parse_ode(ode_text)
    content = monomial_content(ode.f)
    # a bare linear monomial such as y2 is irreducible
    if content.degree() > 1 or (content.degree() == 1 and len(ode.f) > 1):
        _err(
            f"warning: F has the monomial factor {print_canonical(content)}; "
            "results describe the ideal (F) away from the zero set of its leading coefficient"
        )


def cmd_symmetries(args) -> int:
    if args.deg < 0:
        _err("--deg must be nonnegative")
        return EXIT_INPUT
    _warn_reducible(args.ode)
    result = audit.analyze(args.ode, args.deg)
    result.pop("_fields")
    if args.format == "json":
        sys.stdout.write(audit.dumps(result))
        return EXIT_OK
    ode = parse_ode(args.ode)
    print(f"equation:  {print_canonical(ode.f)} = 0  (order {ode.order})")
    print(f"degree:    {args.deg}")
    print(f"dimension: {result['dimension']}")
    for i, s in enumerate(result["basis"], 1):
        print(f"  X{i} = {s}")
    print(f"closed:    {'yes' if result['closed'] else 'no (brackets leave the truncated span)'}")
    if result["closed"]:
        print(f"killing rank: {result['killing_rank']}")
        print(f"derived series dims: {result['derived_dims']}")
    return EXIT_OK


def cmd_verify(args) -> int:
    ode = parse_ode(args.ode)
    field = parse_field(args.field)
    res = verify(ode, field)
    if not res.is_symmetry:
        print(f"not a symmetry; defect = {print_canonical(res.defect)}")
        return EXIT_FAIL
    lc = print_canonical(ode.f.leading_coeff(ode.top))
    print("symmetry: yes")
    print(f"cofactor: {print_canonical(res.cofactor)}")
    print(f"power:    {res.power}")
    lhs = "prX(F)" if res.power == 0 else f"({lc})^{res.power} * prX(F)"
    print(f"identity: {lhs} = cofactor * F")
    return EXIT_OK


def cmd_bracket(args) -> int:
    a, b = parse_field(args.a), parse_field(args.b)
    print(format_field(bracket(a, b)))
    return EXIT_OK


def cmd_audit(args) -> int:
    if args.jobs < 1:
        _err("--jobs must be positive")
        return EXIT_INPUT
    path = args.corpus or audit.shipped_corpus_path()
    try:
        entries = audit.load_corpus(path)
    except OSError as exc:
        _err(f"cannot read corpus: {exc}")
        return EXIT_INPUT
    except audit.CorpusError as exc:
        _err(f"malformed corpus: {exc}")
        return EXIT_INPUT
    report = audit.build_report(entries, jobs=args.jobs)
    text = audit.dumps(report)
    if args.out:
        audit.write_atomic(args.out, text)
        for e in report["entries"]:
            status = "ok  " if e["expected_ok"] else "FAIL"
            print(f"{status} {e['name']}: dim {e['dimension']} (degree {e['degree']})")
        s = report["summary"]
        print(f"second-order dims: {s['dims_observed']}; within theorem set: {s['second_order_dims_in_theorem_set']}")
        print(f"note: {s['note']}")
    else:
        sys.stdout.write(text)
    for name in report["summary"]["failed_entries"]:
        _err(f"entry failed: {name}")
    return EXIT_OK if audit.report_ok(report) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="odesym",
        description="Lie point symmetries of implicit polynomial ODEs F(x, y, y', y'') = 0.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("symmetries", help="compute the polynomial symmetry algebra")
    p.add_argument("ode")
    p.add_argument("--deg", type=int, default=DEFAULT_DEGREE, help="ansatz degree (default %(default)s)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_symmetries)

    p = sub.add_parser("verify", help="check that a point field is a symmetry")
    p.add_argument("ode")
    p.add_argument("--field", required=True, help='"xi, eta"')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bracket", help="commutator of two point fields")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("audit", help="run a JSON Lines corpus (default: the shipped one)")
    p.add_argument("corpus", nargs="?")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _err(f"parse error: {exc}")
        return EXIT_INPUT
    except DegenerateError as exc:
        _err(f"degenerate equation: {exc}")
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
