"""Command-line front end.

Exit codes: 0 ok, 1 verification failed, 2 usage or parameter error,
3 inconclusive search, 4 construction failed its post-verification.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .bounds import closed_form_spectrum, fall_bounds
from .coloring import format_coloring, is_fall, parse_coloring
from .combinatorics import construct_sts, format_design, parse_design, verify_design
from .constructions import (
    coloring_from_design,
    lift_coloring,
    prop4_coloring,
    star_triangle_coloring,
)
from .errors import BudgetExceeded, ConstructionError, FallkolorError
from .graph import kneser, read_dimacs, write_dimacs
from .solver import SearchInconclusive, enumerate_mis, fall_spectrum, find_fall_coloring

OK, VERIFY_FAIL, USAGE, INCONCLUSIVE, UNVERIFIED = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 already; keep the message on stderr
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _manifest(args: argparse.Namespace, out: str | None) -> None:
    """Write <out>.manifest.json describing the run; skipped when writing to stdout."""
    if not out:
        return
    params = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    manifest = {
        "command": args.command,
        "parameters": params,
        "output": out,
        "determinism": "no randomness; identical parameters and inputs give identical output",
        "version": __version__,
    }
    Path(str(out).rstrip("/") + ".manifest.json").write_text(json.dumps(manifest, indent=1, default=str) + "\n")


def _load_graph(args: argparse.Namespace):
    if getattr(args, "kneser", None):
        n, m = args.kneser
        return kneser(n, m)
    if not args.graph:
        raise ValueError("give a graph file or --kneser N M")
    return read_dimacs(Path(args.graph).read_text(), name=Path(args.graph).stem)


def cmd_kneser(args) -> int:
    _emit(write_dimacs(kneser(args.n, args.m)), args.out)
    _manifest(args, args.out)
    return OK


def cmd_spectrum(args) -> int:
    g = _load_graph(args)
    budget = args.node_budget
    if args.k is not None:
        catalog = enumerate_mis(g)
        try:
            c = find_fall_coloring(g, args.k, catalog=catalog, node_budget=budget, workers=args.workers)
        except SearchInconclusive as e:
            print(f"inconclusive: {e}", file=sys.stderr)
            return INCONCLUSIVE
        if c is None:
            _emit(json.dumps({"graph": g.name, "k": args.k, "attained": False}, indent=1) + "\n", args.out)
        else:
            _emit(format_coloring(g, c, f"solver exact cover on {g.name}"), args.out)
        _manifest(args, args.out)
        return OK
    result = fall_spectrum(g, args.k_min, args.k_max, node_budget=budget, workers=args.workers)
    if args.out:
        result.write(g, args.out)
    else:
        sys.stdout.write(result.dumps(g))
    _manifest(args, args.out)
    print(
        f"{g.name}: spectrum {list(result.spectrum)} nodes {sum(result.nodes.values())} "
        f"elapsed {result.elapsed:.2f}s",
        file=sys.stderr,
    )
    if result.partial:
        print(f"partial result, unresolved k: {list(result.unresolved)}", file=sys.stderr)
        return INCONCLUSIVE
    return OK


def cmd_verify(args) -> int:
    g = _load_graph(args)
    c, provenance = parse_coloring(g, Path(args.coloring).read_text())
    verdict = is_fall(g, c)
    if verdict:
        print(f"pass: fall {c.k}-coloring of {g.name}")
        return OK
    print(f"fail: not a fall coloring of {g.name}, witness {verdict.witness}")
    return VERIFY_FAIL


def cmd_construct(args) -> int:
    recipe = args.recipe
    if recipe == "design":
        d = construct_sts(args.n) if args.sts else parse_design(Path(args.design).read_text())
        result = coloring_from_design(args.n, args.m, d)
    elif recipe == "star-triangle":
        result = star_triangle_coloring(args.n)
    elif recipe == "prop4":
        d = parse_design(Path(args.design).read_text()) if args.design else None
        result = prop4_coloring(args.n, args.m, d)
    else:
        source = kneser(args.n, args.m)
        c, _ = parse_coloring(source, Path(args.source).read_text())
        result = lift_coloring(args.n, args.m, c, target=source)
    _emit(format_coloring(result.graph, result.coloring, result.provenance), args.out)
    _manifest(args, args.out)
    print(f"verified fall {result.k}-coloring of {result.graph.name}", file=sys.stderr)
    return OK


def cmd_bounds(args) -> int:
    f = closed_form_spectrum(args.n, args.m)
    parts = []
    if args.n >= 2 * args.m:
        lower, upper = fall_bounds(args.n, args.m)
        parts += [f"lower {lower}", f"upper {upper}"]
    spec = f.spectrum
    if spec is None:
        parts.append("exact unknown")
    else:
        parts.append("exact {" + ",".join(map(str, sorted(spec))) + "}")
    _emit(", ".join(parts) + "\n", args.out)
    _manifest(args, args.out)
    return OK


def cmd_sts(args) -> int:
    _emit(format_design(construct_sts(args.v)), args.out)
    _manifest(args, args.out)
    return OK


def cmd_design_verify(args) -> int:
    d = parse_design(Path(args.design).read_text())
    report = verify_design(d, budget=args.budget)
    if report:
        print(f"pass: {d.t}-({d.v},{d.k},{d.lam}) design with {d.b} blocks")
        return OK
    print(f"fail: t-subset {set(report.witness)} lies in {report.count} blocks")
    return VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fallkolor", description="Fall colorings of Kneser graphs.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("kneser", help="write KG(n,m) in DIMACS format with subset labels")
    s.add_argument("n", type=int)
    s.add_argument("m", type=int)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_kneser)

    s = sub.add_parser("spectrum", help="exhaustive fall spectrum, or one k with --k")
    s.add_argument("graph", nargs="?")
    s.add_argument("--kneser", nargs=2, type=int, metavar=("N", "M"))
    s.add_argument("--k", type=int)
    s.add_argument("--k-min", type=int)
    s.add_argument("--k-max", type=int)
    s.add_argument("--node-budget", type=int, default=None)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("-o", "--out", help="output directory (file with --k)")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("verify", help="check that a coloring file is a fall coloring")
    s.add_argument("graph", nargs="?")
    s.add_argument("coloring")
    s.add_argument("--kneser", nargs=2, type=int, metavar=("N", "M"))
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("construct", help="build a verified fall coloring")
    s.add_argument("recipe", choices=["design", "star-triangle", "prop4", "lift"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, default=2)
    s.add_argument("--sts", action="store_true", help="use the built-in STS(n) as the design")
    s.add_argument("--design", help="design file")
    s.add_argument("--from", dest="source", help="fall coloring of KG(n,m) to lift")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("bounds", help="closed-form spectrum and bounds for KG(n,m)")
    s.add_argument("n", type=int)
    s.add_argument("m", type=int)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("sts", help="write a Steiner triple system of order v")
    s.add_argument("v", type=int)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_sts)

    s = sub.add_parser("design-verify", help="verify a design file")
    s.add_argument("design")
    s.add_argument("--budget", type=int, default=10**7)
    s.set_defaults(func=cmd_design_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "construct":
        if args.recipe == "design" and not (args.sts or args.design):
            print("construct design: give --sts or --design", file=sys.stderr)
            return USAGE
        if args.recipe == "lift" and not args.source:
            print("construct lift: give --from", file=sys.stderr)
            return USAGE
    if getattr(args, "node_budget", 0) is None and os.environ.get("FALLKOLOR_NODE_BUDGET"):
        args.node_budget = int(os.environ["FALLKOLOR_NODE_BUDGET"])
    try:
        return args.func(args)
    except ConstructionError as e:
        print(f"construction unverified: {e}", file=sys.stderr)
        return UNVERIFIED
    except SearchInconclusive as e:
        print(f"inconclusive: {e}", file=sys.stderr)
        return INCONCLUSIVE
    except (ValueError, FallkolorError, BudgetExceeded, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
