"""Command-line front end and the edge-list file format.

Edge-list format::

    p hyp <n> <r> <m>
    <r ascending ids>        (m lines, lexicographically sorted)

Lines starting with ``c`` are comments. Exit codes: 0 success, 1 usage or
input error, 2 verification failure, 3 exact search out of budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

import numpy as np

from . import constructions as cons
from .analysis import alpha_exact, alpha_greedy, bound_five_four, bound_pp20, bound_product_h, bound_rs_lower, report
from .analysis.bounds import product_t_raw
from .hypergraph import DesignParams, Hypergraph, Provenance, product, shadow, verify_design

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class FormatError(ValueError):
    pass


class _UsageError(Exception):
    pass


def format_edgelist(H: Hypergraph) -> str:
    lines = [f"p hyp {H.n} {H.r} {H.num_edges}"]
    lines.extend(" ".join(map(str, row)) for row in H.edges.tolist())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Hypergraph:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("c")]
    if not lines:
        raise FormatError("empty edge list")
    header = lines[0].split()
    if len(header) != 5 or header[:2] != ["p", "hyp"]:
        raise FormatError(f"bad header {lines[0]!r}; expected 'p hyp n r m'")
    try:
        n, r, m = (int(x) for x in header[2:])
        ids = np.array(" ".join(lines[1:]).split(), dtype=np.int64)
    except ValueError as exc:
        raise FormatError(f"non-integer token: {exc}") from None
    if len(lines) - 1 != m or ids.size != m * r:
        raise FormatError(f"header promises {m} edges of size {r}, body has {len(lines) - 1} lines / {ids.size} ids")
    H = Hypergraph(n, r, ids.reshape(m, r))
    if H.num_edges != m:
        raise FormatError("duplicate edges")
    return H


def read_hypergraph(path: str) -> Hypergraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_edgelist(text)


def write_hypergraph(H: Hypergraph, path: str | None) -> None:
    _write_text(format_edgelist(H), path)


def _write_text(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# -- argument parsing -----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _params_arg(text: str) -> tuple[int, int, int]:
    try:
        n, r, s = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,r,s, got {text!r}") from None
    return n, r, s


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="explicit-designs", description="Construct, verify and analyse (n,r,s)-systems.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    construct = sub.add_parser("construct", help="build a design")
    kinds = construct.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    ap = kinds.add_parser("ap", help="all r-term progressions in Z_r^k")
    ap.add_argument("--r", type=int, required=True)
    ap.add_argument("--k", type=int, required=True)
    ff = kinds.add_parser("five-four", help="recursive (3^k,5,4)-system")
    ff.add_argument("--k", type=int, required=True)
    rs = kinds.add_parser("rs", help="(n,r,s)-system from the product pipeline")
    rs.add_argument("--n", type=int, required=True)
    rs.add_argument("--r", type=int, required=True)
    rs.add_argument("--s", type=int, required=True)
    for p in (ap, ff, rs):
        p.add_argument("-o", "--output")

    sh = sub.add_parser("shadow", help="keep the r' smallest vertices of every edge")
    sh.add_argument("-i", "--input", required=True)
    sh.add_argument("--r-prime", type=int, required=True)
    pr = sub.add_parser("product", help="direct product of two hypergraphs")
    pr.add_argument("-i", "--input", action="append", required=True)
    tr = sub.add_parser("trim", help="induced sub-hypergraph on the first n ids")
    tr.add_argument("-i", "--input", required=True)
    tr.add_argument("--n", type=int, required=True)
    for p in (sh, pr, tr):
        p.add_argument("-o", "--output")

    ve = sub.add_parser("verify", help="check that every s-set lies in at most one edge")
    ve.add_argument("-i", "--input", required=True)
    ve.add_argument("--s", type=int, required=True)

    al = sub.add_parser("alpha", help="independence number")
    al.add_argument("-i", "--input", required=True)
    al.add_argument("--exact", action="store_true")
    al.add_argument("--budget", type=int, default=10**6, help="node limit for --exact")
    al.add_argument("--greedy", action="store_true")
    al.add_argument("--iters", type=int, default=100)
    al.add_argument("--seed", type=int)

    bo = sub.add_parser("bounds", help="evaluate a closed-form bound")
    bo.add_argument("--which", choices=["rs", "pp20", "five-four", "product"], required=True)
    for name in ("n", "r", "s", "n1", "n2", "r1"):
        bo.add_argument(f"--{name}", type=int)
    bo.add_argument("--k", type=float)
    bo.add_argument("--f", type=float)
    bo.add_argument("--g", type=float)
    bo.add_argument("--digits", type=int, default=2)

    rp = sub.add_parser("report", help="JSON report for a design")
    rp.add_argument("-i", "--input", required=True)
    rp.add_argument("--params", type=_params_arg, required=True, metavar="n,r,s")
    rp.add_argument("--json", required=True, metavar="OUT")
    rp.add_argument("--seed", type=int, required=True)
    rp.add_argument("--iters", type=int, default=100)
    rp.add_argument("--budget", type=int, help="run the exact search with this node limit")
    return parser


# -- commands -------------------------------------------------------------------


def _construct(args) -> int:
    if args.kind == "ap":
        H = cons.ap_system(args.r, args.k)
    elif args.kind == "five-four":
        H = cons.five_four(args.k)
    else:
        H, _ = cons.build_rs_system(args.n, args.r, args.s)
    write_hypergraph(H, args.output)
    return EXIT_OK


def _verify(args, out: TextIO, err: TextIO) -> int:
    H = read_hypergraph(args.input)
    check = verify_design(H, args.s)
    if check.ok:
        out.write("ok\n")
        return EXIT_OK
    a, b = check.witness
    err.write(f"violation: edges {' '.join(map(str, a))} and {' '.join(map(str, b))} share >= {args.s} vertices\n")
    return EXIT_INVALID


def _alpha(args, out: TextIO) -> int:
    H = read_hypergraph(args.input)
    greedy = args.greedy or not args.exact
    if greedy and args.seed is None:
        raise _UsageError("--greedy needs an explicit --seed")
    code = EXIT_OK
    if greedy:
        size, _ = alpha_greedy(H, args.iters, args.seed)
        out.write(f"alpha_greedy {size}\n")
    if args.exact:
        res = alpha_exact(H, args.budget)
        if res.exact:
            out.write(f"alpha_exact {res.value}\n")
        else:
            out.write(f"alpha_bounds {res.lower} {res.upper}\n")
            code = EXIT_BUDGET
    return code


def _need(args, *names: str) -> list:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise _UsageError(f"--which {args.which} needs " + ", ".join(f"--{n}" for n in missing))
    return [getattr(args, n) for n in names]


def _bounds(args, out: TextIO) -> int:
    fmt = f"{{:.{args.digits}f}}"
    if args.which == "rs":
        out.write(fmt.format(bound_rs_lower(*_need(args, "n", "r", "s"))) + "\n")
    elif args.which == "pp20":
        out.write(fmt.format(bound_pp20(*_need(args, "k"))) + "\n")
    elif args.which == "five-four":
        out.write(fmt.format(bound_five_four(*_need(args, "k"))) + "\n")
    else:
        n1, n2, r1, f, g = _need(args, "n1", "n2", "r1", "f", "g")
        t, h = bound_product_h(n1, n2, r1, f, g)
        out.write(f"t {t}\nt_raw {fmt.format(product_t_raw(n1, r1, f, g))}\nh {fmt.format(h)}\n")
    return EXIT_OK


def _report(args) -> int:
    H = read_hypergraph(args.input)
    n, r, s = args.params
    if (n, r) != (H.n, H.r):
        raise _UsageError(f"--params n,r = {n},{r} but the file holds n={H.n}, r={H.r}")
    params = DesignParams(n, r, s, Provenance("file", {"path": args.input}))
    rep = report(H, params, seed=args.seed, greedy_iters=args.iters, exact_budget=args.budget)
    _write_text(json.dumps(rep.to_json(), indent=2) + "\n", args.json)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out, err = sys.stdout, sys.stderr
    try:
        if args.command == "construct":
            return _construct(args)
        if args.command == "shadow":
            write_hypergraph(shadow(read_hypergraph(args.input), args.r_prime), args.output)
            return EXIT_OK
        if args.command == "product":
            if len(args.input) != 2:
                raise _UsageError("product takes exactly two -i inputs")
            H1, H2 = (read_hypergraph(p) for p in args.input)
            write_hypergraph(product(H1, H2), args.output)
            return EXIT_OK
        if args.command == "trim":
            write_hypergraph(cons.trim(read_hypergraph(args.input), args.n), args.output)
            return EXIT_OK
        if args.command == "verify":
            return _verify(args, out, err)
        if args.command == "alpha":
            return _alpha(args, out)
        if args.command == "bounds":
            return _bounds(args, out)
        return _report(args)
    except (_UsageError, ValueError, OverflowError, OSError) as exc:
        err.write(f"explicit-designs: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
