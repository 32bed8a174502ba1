"""``domipoly`` command-line front end.

Subcommands::

    gen    SPEC                 write the graph in edge-list text format
    poly   SPEC [--method M]    D(G, x) as JSON (or its value with --at)
    gamma  SPEC [--method ...]  domination number by formula and/or oracle
    check  --grid kmax=K nmax=N every method against the oracle on a grid
    roots  SPEC                 RootSet JSON for D(G, x)
    sweep  --k K --nmin A --nmax B   CSV of (n, re, im) for D(S_{k,n-k})

SPEC is ``kind:k:n`` (``kpath:3:7``, ``path:5``, ``ktree:2`` with
``--script``) or the path of a graph file.  Errors print one line on stderr
and exit with status 1; usage errors exit with status 2.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from typing import Sequence

from . import checks
from .errors import ConvergenceError, DomipolyError
from .families import KINDS, FamilySpec, canonical_kind, generate, parse_script, parse_spec
from .graph import Graph, corona, read_graph, write_graph
from .oracle import domination_polynomial
from .recurrences import d_corona, gamma_formula
from .roots import (
    DEFAULT_EPS,
    DEFAULT_TOL,
    classify_real,
    kstar_sweep,
    find_roots,
    scatter_rows,
    sweep_summary,
    write_scatter_csv,
)

PROG = "domipoly"


class CliError(Exception):
    pass


def _target(text: str, script_path: str | None = None) -> FamilySpec | Graph:
    if os.path.isfile(text):
        with open(text) as fh:
            return read_graph(fh)
    script = None
    if script_path is not None:
        with open(script_path) as fh:
            script = parse_script(fh.read())
    return parse_spec(text, script)


def _as_graph(t: FamilySpec | Graph) -> Graph:
    return generate(t) if isinstance(t, FamilySpec) else t


@contextlib.contextmanager
def _sink(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _polynomial(args):
    t = _target(args.spec, args.script)
    if args.corona_with is None:
        if args.method == "corona_product":
            raise CliError("corona_product needs --corona-with")
        return checks.compute(args.method, t)
    g, h = _as_graph(t), _as_graph(_target(args.corona_with))
    if args.method == "oracle":
        return domination_polynomial(corona(g, h))
    if args.method == "corona_product":
        return d_corona(g.n, h.n, domination_polynomial(h))
    raise CliError(f"with --corona-with the method must be oracle or corona_product, not {args.method}")


def cmd_gen(args) -> int:
    g = _as_graph(_target(args.spec, args.script))
    with _sink(args.output) as fh:
        write_graph(g, fh)
    return 0


def cmd_poly(args) -> int:
    p = _polynomial(args)
    with _sink(args.output) as fh:
        if args.at is not None:
            for v in args.at:
                fh.write(f"{p(v)}\n")
        elif args.format == "text":
            fh.write(f"{p}\n")
        else:
            fh.write(p.to_json() + "\n")
    return 0


def cmd_gamma(args) -> int:
    t = _target(args.spec, args.script)
    if args.method in ("formula", "both") and not isinstance(t, FamilySpec):
        raise CliError("the formula route needs a family spec, not a graph file")
    with _sink(args.output) as fh:
        if args.method == "formula":
            fh.write(f"{gamma_formula(t)}\n")
        elif args.method == "oracle":
            fh.write(f"{domination_polynomial(_as_graph(t)).min_degree()}\n")
        else:
            f = gamma_formula(t)
            o = domination_polynomial(_as_graph(t)).min_degree()
            fh.write(f"formula={f} oracle={o}\n")
    return 0


def _grid_params(items: Sequence[str]) -> tuple[int, int]:
    params = {"kmax": 3, "nmax": 12}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or key not in params:
            raise CliError(f"bad grid parameter {item!r}; expected kmax=K or nmax=N")
        try:
            params[key] = int(value)
        except ValueError:
            raise CliError(f"grid parameter {key} must be an integer") from None
    return params["kmax"], params["nmax"]


def cmd_check(args) -> int:
    kmax, nmax = _grid_params(args.grid)
    kinds = KINDS[:-1]
    if args.kinds:
        kinds = tuple(canonical_kind(k) for k in args.kinds)
    reports = checks.run_grid(
        kmax, nmax,
        methods=args.methods,
        include_printed=args.printed,
        scalars=not args.no_scalars,
        kinds=kinds,
    )
    if args.output is not None:
        with _sink(args.output) as fh:
            for r in reports:
                fh.write(r.to_json() + "\n")
    if args.output != "-":
        for r in reports:
            if not r.ok:
                print(r.to_json())
    line = checks.summary_line(reports, kmax, nmax)
    print(line)
    if args.strict and not all(r.ok for r in reports):
        return 1
    return 0


def _rootset_payload(rs, eps: float) -> dict:
    out = rs.to_dict()
    count, reals = classify_real(rs, eps)
    out["nonzero_real_count"] = count
    out["real_roots"] = [format(v, ".17g") for v in reals]
    return out


def cmd_roots(args) -> int:
    p = _polynomial(args)
    rs = find_roots(p, args.tol)
    with _sink(args.output) as fh:
        fh.write(json.dumps(_rootset_payload(rs, args.eps), separators=(",", ":")) + "\n")
    return 0


def cmd_sweep(args) -> int:
    sweep = kstar_sweep(args.k, args.nmin, args.nmax, args.tol)
    with _sink(args.output) as fh:
        write_scatter_csv(scatter_rows(sweep), fh)
    if args.summary:
        for n, count, _, resid in sweep_summary(sweep, args.eps):
            print(f"n={n} nonzero_real={count} max_residual={resid:.3g}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Domination polynomials of k-tree families.")
    sub = parser.add_subparsers(dest="command", required=True)

    def spec_args(p):
        p.add_argument("spec", help="kind:k:n family spec or graph file path")
        p.add_argument("--script", help="attachment script for ktree specs")
        p.add_argument("-o", "--output", help="output path (default stdout)")

    def method_args(p):
        p.add_argument("--method", default="oracle", choices=checks.METHOD_TAGS)
        p.add_argument("--corona-with", metavar="SPEC",
                       help="take the corona product with this second graph")

    p = sub.add_parser("gen", help="write a family graph")
    spec_args(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("poly", help="domination polynomial")
    spec_args(p)
    method_args(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--at", type=int, nargs="+", metavar="X", help="evaluate at integer points")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("gamma", help="domination number")
    spec_args(p)
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="both")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("check", help="compare every method with the oracle on a grid")
    p.add_argument("--grid", nargs="*", default=[], metavar="KEY=VALUE")
    p.add_argument("--kinds", nargs="+", help="restrict to these family kinds")
    p.add_argument("--methods", nargs="+", choices=checks.METHOD_TAGS)
    p.add_argument("--printed", action="store_true", help="include literal printed formulas")
    p.add_argument("--no-scalars", action="store_true", help="skip gamma, alpha and D(-1) checks")
    p.add_argument("--strict", action="store_true", help="exit 1 when there are findings")
    p.add_argument("-o", "--output", help="write every report as JSON lines")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("roots", help="complex roots of D(G, x)")
    spec_args(p)
    method_args(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("sweep", help="root scatter of D(S_{k,n-k}) over a range of n")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--nmin", type=int, default=5)
    p.add_argument("--nmax", type=int, default=44)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--summary", action="store_true", help="per-n real-root counts on stderr")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConvergenceError as exc:
        print(f"{PROG}: convergence error: {exc}", file=sys.stderr)
    except (DomipolyError, CliError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"{PROG}: error: {exc.strerror or exc}: {exc.filename or ''}".rstrip(": "), file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
