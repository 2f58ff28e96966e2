"""Command line front end: queries, enumeration, rewriting, verification."""

from __future__ import annotations

import argparse
import json
import os
import sys

from sympbranch import diagrams, exacteval, hibi, monomials, straighten
from sympbranch.diagrams import normalize, order_type_str

SCHEMA = "1"


def _parse_diagram(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text or text in ("-", "()"):
        return ()
    try:
        return normalize(int(piece) for piece in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed diagram {text!r}: {exc}") from exc


def _fmt_diagram(d) -> str:
    return "[" + ",".join(str(p) for p in d) + "]"


def _emit(payload: dict, text_lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _default_seed() -> int:
    return int(os.environ.get("SYMPBRANCH_SEED", "0"))


def _cmd_mult(args) -> int:
    d, f = _parse_diagram(args.D), _parse_diagram(args.F)
    count = diagrams.multiplicity(d, f, args.n)
    payload = {"schema": SCHEMA, "command": "mult", "n": args.n,
               "D": list(d), "F": list(f), "multiplicity": count}
    lines = [f"multiplicity(D={_fmt_diagram(d)}, F={_fmt_diagram(f)}, "
             f"n={args.n}) = {count}"]
    if args.list:
        middles = diagrams.enumerate_middle(d, f, args.n)
        payload["middles"] = [list(e) for e in middles]
        lines += [f"  E = {_fmt_diagram(e)}" for e in middles]
    _emit(payload, lines, args.json)
    return 0


def _cmd_basis(args) -> int:
    d, f = _parse_diagram(args.D), _parse_diagram(args.F)
    basis = monomials.enumerate_standard(d, f, args.n)
    entries = []
    lines = [f"basis(D={_fmt_diagram(d)}, F={_fmt_diagram(f)}, n={args.n}): "
             f"{len(basis)} standard monomials"]
    for k, m in enumerate(basis, start=1):
        e = monomials.middle_diagram(m)
        weight = diagrams.tl_weight(d, e, f, args.n)
        word = order_type_str(monomials.chain_order_type(m))
        tab = monomials.to_tableau(m)
        entries.append({"monomial": m.tokens(), "E": list(e),
                        "order_type": word, "tl_weight": list(weight),
                        "tableau": tab.to_json()})
        lines.append(f"#{k} {m}  E={_fmt_diagram(e)}  type={word}  "
                     f"weight=({','.join(str(w) for w in weight)})")
        lines += ["    " + " ".join(str(v) for v in row) for row in tab.rows]
    payload = {"schema": SCHEMA, "command": "basis", "n": args.n,
               "D": list(d), "F": list(f), "count": len(basis),
               "monomials": entries}
    _emit(payload, lines, args.json)
    return 0


def _cmd_straighten(args) -> int:
    poly = straighten.parse_poly(args.expr, args.n)
    base = straighten.default_weight_base(args.n)
    result = (straighten.hibi_normal_form(poly) if args.hibi
              else straighten.straighten(poly))
    terms = []
    for mono, coeff in straighten.sorted_terms(result):
        terms.append({"coeff": f"{coeff.numerator}/{coeff.denominator}",
                      "monomial": [c.token() for c in mono],
                      "weight": straighten.lattice_weight(mono, base)})
    payload = {"schema": SCHEMA, "command": "straighten", "n": args.n,
               "mode": "hibi" if args.hibi else "straighten",
               "input": straighten.format_poly(poly),
               "weight_base": base, "terms": terms,
               "result": straighten.format_poly(result)}
    lines = [straighten.format_poly(result)]
    lines += [f"  {str(coeff):>5}  [{','.join(c.token() for c in mono)}]"
              f"  wt={straighten.lattice_weight(mono, base)}"
              for mono, coeff in straighten.sorted_terms(result)]
    lines.append(f"(weight base N = {base})")
    _emit(payload, lines, args.json)
    return 0


_SUITES = ("relations", "invariance", "torus", "independence", "all")


def _cmd_verify(args) -> int:
    if args.suite not in _SUITES:
        raise ValueError(f"unknown suite {args.suite!r}")
    names = _SUITES[:-1] if args.suite == "all" else (args.suite,)
    d = _parse_diagram(args.D) if args.D is not None else None
    f = _parse_diagram(args.F) if args.F is not None else None
    reports = []
    for name in names:
        if name == "relations":
            reports.append(exacteval.relations_suite(args.n, args.seed, args.trials))
        elif name == "invariance":
            reports.append(exacteval.invariance_suite(args.n, args.seed, args.trials))
        elif name == "torus":
            reports.append(exacteval.torus_suite(args.n, args.seed, args.trials))
        else:
            reports.append(exacteval.independence_suite(
                args.n, args.seed, args.trials, d=d, f=f))
    total = sum(len(r["failures"]) for r in reports)
    payload = {"schema": SCHEMA, "command": "verify", "suite": args.suite,
               "n": args.n, "seed": args.seed, "trials": args.trials,
               "reports": reports, "failures_total": total}
    lines = [f"suite {r['op']}: n={args.n} seed={args.seed} "
             f"trials={r['trials']} failures={len(r['failures'])}"
             for r in reports]
    lines.append("PASS" if total == 0 else "FAIL")
    _emit(payload, lines, args.json)
    return 0 if total == 0 else 1


def _cmd_degenerate(args) -> int:
    d, f = _parse_diagram(args.D), _parse_diagram(args.F)
    basis = monomials.enumerate_standard(d, f, args.n)
    margin = hibi.count_patterns(d, f, args.n)
    entries = []
    lines = [f"degenerate(D={_fmt_diagram(d)}, F={_fmt_diagram(f)}, n={args.n})"]
    for k, m in enumerate(basis, start=1):
        p = hibi.chain_to_pattern(m)
        entries.append({"monomial": m.tokens(), **p.to_json()})
        lines.append(f"#{k} {m}")
        lines += ["    " + row for row in hibi.pretty(p).splitlines()]
    payload = {"schema": SCHEMA, "command": "degenerate", "n": args.n,
               "D": list(d), "F": list(f), "count": len(basis),
               "margin_count": margin, "patterns": entries}
    lines.append(f"margin count = {margin} (basis size {len(basis)})")
    _emit(payload, lines, args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympbranch",
        description="Exact queries on branching multiplicities, standard "
                    "monomials, straightening and toric degeneration.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, diagrams_positional=True):
        if diagrams_positional:
            p.add_argument("D", help="comma-separated diagram, e.g. 4,3,1 "
                                     "(empty string for the empty diagram)")
            p.add_argument("F", help="comma-separated diagram")
        p.add_argument("--n", type=int, required=True, help="rank, at least 2")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("mult", help="branching multiplicity of a pair")
    common(p)
    p.add_argument("--list", action="store_true", help="list middle diagrams")
    p.set_defaults(func=_cmd_mult)

    p = sub.add_parser("basis", help="standard monomial basis of a pair")
    common(p)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("straighten", help="rewrite a polynomial to standard form")
    p.add_argument("expr", help="polynomial, e.g. '[I1,K0]' or '2*[I1,K0] - [J0]'")
    common(p, diagrams_positional=False)
    p.add_argument("--hibi", action="store_true",
                   help="use the one-term associated graded rule")
    p.set_defaults(func=_cmd_straighten)

    p = sub.add_parser("verify", help="run a randomized exact verification suite")
    p.add_argument("suite", choices=_SUITES)
    common(p, diagrams_positional=False)
    p.add_argument("--seed", type=int, default=None,
                   help="64-bit seed (default: SYMPBRANCH_SEED or 0)")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--D", default=None, help="diagram for the independence suite")
    p.add_argument("--F", default=None, help="diagram for the independence suite")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("degenerate", help="patterns of the degenerated basis")
    common(p)
    p.set_defaults(func=_cmd_degenerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None and args.command == "verify":
        args.seed = _default_seed()
    if getattr(args, "trials", 1) < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return 2
    if args.n < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
