"""Command-line front end.

Exit codes: 0 success, 1 parse/validation error, 2 computational error
(degree, dimension, scalar domain, ...), 3 honest negative (no witness
constructor applies, map fails verification, search incomplete).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .algebra import algebra_from_graph, algebra_from_random_walk
from .errors import EvoAlgError, IngestionError, SpecError
from .families import build_family, parse_graph_spec, render_spec
from .homsolver import (
    YES,
    LinearMap,
    complete_bipartite_parts,
    npartite_survey,
    partitions_up_to,
    solve_monomial_homs,
    verify_isomorphism,
    witness_for,
)
from .markov import simulate_walk, stationary_distribution
from .polysys import generate_hom_system, poly_to_text
from .scalars import format_scalar

EXIT_OK, EXIT_INPUT, EXIT_COMPUTE, EXIT_NEGATIVE = 0, 1, 2, 3
DIRECTIONS = ("a-to-rw", "rw-to-a")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SpecError(message)


def _graph(args):
    spec = parse_graph_spec(args.spec)
    return spec, build_family(spec)


def _algebras(G, direction):
    A, B = algebra_from_graph(G), algebra_from_random_walk(G)
    return (A, B) if direction == "a-to-rw" else (B, A)


def _emit(out, payload):
    out.write(json.dumps(payload, indent=2) + "\n")


def cmd_build(args, out):
    spec, G = _graph(args)
    A = algebra_from_random_walk(G) if args.random_walk else algebra_from_graph(G)
    matrix = [[format_scalar(c) for c in row] for row in A.structure()]
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerows(matrix)
    elif args.format == "json":
        _emit(out, {"graph": render_spec(spec), "kind": A.kind, "n": A.n,
                    "approximate": G.approximate, "structure": matrix})
    else:
        for i, row in enumerate(A.rows):
            terms = " + ".join((f"e{k + 1}" if c == 1 else f"{format_scalar(c)}*e{k + 1}")
                               for k, c in sorted(row.items())) or "0"
            out.write(f"e{i + 1}^2 = {terms}\n")
    return EXIT_OK


def _witness_scalars(spec, G, T, kind):
    """Group vertices by scale; bipartite scales also get their
    ``m^(1/3)*n^(2/3)`` formula."""
    groups = {}
    for i in range(G.n):
        groups.setdefault(format_scalar(T.entry(i, i)), []).append(i + 1)
    formulas = {}
    if kind == "complete-bipartite":
        p, q = complete_bipartite_parts(G)
        m, n = len(p), len(q)
        formulas[format_scalar(T.entry(p[0], p[0]))] = f"{m}^(1/3)*{n}^(2/3)"
        formulas[format_scalar(T.entry(q[0], q[0]))] = f"{m}^(2/3)*{n}^(1/3)"
    return [{"vertices": vs, "value": v, "formula": formulas.get(v, v)} for v, vs in groups.items()]


def cmd_witness(args, out):
    spec, G = _graph(args)
    found = witness_for(G)
    if found is None:
        payload = {"graph": render_spec(spec), "approximate": G.approximate, "witness": None,
                   "message": "no constructor applies (graph is neither regular nor complete bipartite)"}
        if args.format == "json":
            _emit(out, payload)
        else:
            out.write(payload["message"] + "\n")
        return EXIT_NEGATIVE
    T, kind = found
    A, B = algebra_from_graph(G), algebra_from_random_walk(G)
    verdict = verify_isomorphism(T, A, B)
    scalars = _witness_scalars(spec, G, T, kind)
    if args.map_out:
        Path(args.map_out).write_text(T.to_text() + "\n")
    ok = verdict.is_isomorphism == YES
    if args.format == "json":
        _emit(out, {"graph": render_spec(spec), "approximate": G.approximate, "witness": kind,
                    "verified": ok, "scalars": scalars, "verdict": verdict.to_dict()})
    else:
        out.write(f"graph: {render_spec(spec)}\nwitness: {kind}\n")
        for s in scalars:
            label = s["formula"] if s["formula"] == s["value"] else f"{s['formula']} = {s['value']}"
            out.write(f"  scale {label} on vertices {s['vertices']}\n")
        out.write(f"product preserving: {verdict.product_preserving}; isomorphism: {verdict.is_isomorphism}\n")
        out.write("verified\n" if ok else "NOT verified\n")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_verify(args, out):
    spec, G = _graph(args)
    try:
        text = Path(args.map).read_text()
    except OSError as exc:
        raise IngestionError(f"cannot read {args.map}: {exc.strerror or exc}") from None
    T = LinearMap.parse(text)
    A, B = _algebras(G, args.direction)
    verdict = verify_isomorphism(T, A, B)
    if args.format == "json":
        _emit(out, {"graph": render_spec(spec), "direction": args.direction, **verdict.to_dict()})
    else:
        out.write(f"product preserving: {verdict.product_preserving}\n")
        out.write(f"natural basis extendable: {verdict.natural_basis_extendable}\n")
        out.write(f"isomorphism: {verdict.is_isomorphism}\n")
        for line in verdict.certificate:
            out.write(f"  {line}\n")
    return EXIT_OK if verdict.product_preserving else EXIT_NEGATIVE


def cmd_solve(args, out):
    spec, G = _graph(args)
    A, B = _algebras(G, args.direction)
    budget = None if args.budget_ms is None else args.budget_ms / 1000
    res = solve_monomial_homs(A, B, max_solutions=args.max_solutions, time_budget=budget, max_n=args.max_n)
    if args.format == "json":
        _emit(out, {"graph": render_spec(spec), "direction": args.direction, **res.to_dict()})
    else:
        if res.solutions:
            out.write(f"solutions: null map + {len(res.solutions)} nonzero\n")
            for s in res.solutions:
                out.write(f"  {s.describe()}\n")
        else:
            out.write("solutions: [null map only]\n")
        out.write(f"class: {res.search_class}\ncomplete: {res.complete}\n")
        for b in res.outside_domain:
            out.write(f"  outside scalar domain: targets {b['targets']}: {b['reason']}\n")
        if res.timed_out:
            out.write("  budget exhausted\n")
    return EXIT_OK if res.complete else EXIT_NEGATIVE


def cmd_numeric(args, out):
    from .numeric import search_report

    spec, G = _graph(args)
    A, B = _algebras(G, args.direction)
    report = search_report(render_spec(spec), args.direction, A, B, args.restarts, args.seed, args.constraint)
    _emit(out, report)
    return EXIT_OK


def cmd_ideal(args, out):
    spec, G = _graph(args)
    A, B = _algebras(G, args.direction)
    system = generate_hom_system(A, B)
    if args.format == "json":
        _emit(out, {
            "graph": render_spec(spec), "direction": args.direction, "n": system.n,
            "orthogonality": [{"i": i + 1, "j": j + 1, "l": l + 1, "poly": poly_to_text(p)}
                              for (i, j, l), p in system.orthogonality.items()],
            "squares": [{"i": i + 1, "l": l + 1, "poly": poly_to_text(p)} for (i, l), p in system.squares.items()],
        })
    else:
        out.write(system.to_text() + "\n")
    return EXIT_OK


def cmd_walk(args, out):
    spec, G = _graph(args)
    trace = simulate_walk(G, args.start, args.steps, args.seed)
    if args.format == "csv":
        out.write(trace.visits_csv())
    else:
        _emit(out, {"graph": render_spec(spec), **trace.to_dict()})
    return EXIT_OK


def cmd_stationary(args, out):
    spec, G = _graph(args)
    pi = stationary_distribution(G)
    if args.format == "json":
        _emit(out, {"graph": render_spec(spec), "probs": [str(p) for p in pi]})
    else:
        out.write(",".join(str(p) for p in pi) + "\n")
    return EXIT_OK


def parse_part_ranges(text: str) -> list:
    """``"1-3,2,1-2"`` -> every tuple in the product of the ranges."""
    from itertools import product

    ranges = []
    pos = 0
    for chunk in text.split(","):
        body = chunk.strip()
        try:
            if "-" in body:
                lo, hi = (int(x) for x in body.split("-", 1))
            else:
                lo = hi = int(body)
        except ValueError:
            raise SpecError(f"bad part range {body!r}", pos) from None
        if lo < 1 or hi < lo:
            raise SpecError(f"bad part range {body!r}", pos)
        ranges.append(range(lo, hi + 1))
        pos += len(chunk) + 1
    if len(ranges) < 2:
        raise SpecError("a multipartite graph needs at least 2 parts")
    return list(product(*ranges))


def cmd_survey(args, out):
    if (args.parts is None) == (args.max_total is None):
        raise SpecError("give exactly one of --parts or --max-total")
    grid = parse_part_ranges(args.parts) if args.parts else partitions_up_to(args.max_total)
    budget = None if args.budget_ms is None else args.budget_ms / 1000
    report = npartite_survey(grid, time_budget=budget)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(report.to_csv())
    return EXIT_OK


def _nonneg(name):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise SpecError(f"{name} must be an integer, got {text!r}") from None
        if v < 0:
            raise SpecError(f"{name} must be nonnegative, got {v}")
        return v
    return conv


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="evoalg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_spec(name, help_, formats=("text", "json"), direction=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("spec", help="graph spec, e.g. path:4, bipartite:6,4, petersen, file:edges.txt")
        sp.add_argument("--format", choices=formats, default=formats[0])
        if direction:
            sp.add_argument("--direction", choices=DIRECTIONS, default="a-to-rw")
        return sp

    sp = with_spec("build", "structure matrix of A(G) or A_RW(G)", formats=("text", "json", "csv"))
    sp.add_argument("--random-walk", action="store_true")
    sp.set_defaults(func=cmd_build)

    sp = with_spec("witness", "construct and verify an isomorphism A(G) -> A_RW(G)")
    sp.add_argument("--map-out", help="write the witness matrix here (verify --map format)")
    sp.set_defaults(func=cmd_witness)

    sp = with_spec("verify", "check a map given as a matrix of scalars", direction=True)
    sp.add_argument("--map", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = with_spec("solve-monomial", "enumerate monomial homomorphisms", direction=True)
    sp.add_argument("--max-n", type=_nonneg("--max-n"), default=12)
    sp.add_argument("--budget-ms", type=_nonneg("--budget-ms"))
    sp.add_argument("--max-solutions", type=_nonneg("--max-solutions"))
    sp.set_defaults(func=cmd_solve)

    sp = with_spec("numeric-search", "random-restart residual minimisation", formats=("json",), direction=True)
    sp.add_argument("--restarts", type=_nonneg("--restarts"), required=True)
    sp.add_argument("--seed", type=_nonneg("--seed"), required=True)
    sp.add_argument("--constraint", choices=("unit-frobenius", "unit-rows"), default="unit-frobenius")
    sp.set_defaults(func=cmd_numeric)

    sp = with_spec("ideal", "product-preservation polynomial system", direction=True)
    sp.set_defaults(func=cmd_ideal)

    sp = with_spec("walk", "simulate the random walk", formats=("json", "csv"))
    sp.add_argument("--start", type=_nonneg("--start"), required=True)
    sp.add_argument("--steps", type=_nonneg("--steps"), required=True)
    sp.add_argument("--seed", type=_nonneg("--seed"), required=True)
    sp.set_defaults(func=cmd_walk)

    sp = with_spec("stationary", "exact stationary distribution")
    sp.set_defaults(func=cmd_stationary)

    sp = sub.add_parser("survey", help="complete multipartite survey")
    sp.add_argument("--parts", help="comma-separated part-size ranges, e.g. 1-3,1-3,1-2")
    sp.add_argument("--max-total", type=_nonneg("--max-total"), help="all partitions with sum <= N")
    sp.add_argument("--budget-ms", type=_nonneg("--budget-ms"))
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_survey)
    return p


def run_command(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = make_parser().parse_args(argv)
        if getattr(args, "restarts", None) == 0:
            raise SpecError("--restarts must be >= 1")
        return args.func(args, out)
    except EvoAlgError as exc:
        err.write(f"error: {exc}\n")
        return exc.exit_code


def run_captured(argv) -> tuple[int, str, str]:
    """Run a command and capture ``(exit code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
