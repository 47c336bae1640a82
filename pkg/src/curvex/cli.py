"""Command-line front end. Every subcommand prints one JSON document.

Exit codes: 0 on success, 1 when the computation raises a domain error (its
class name goes to stderr), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from curvex.census import enumerate_connected, gnp_experiment, scan_graph6
from curvex.construct import algorithm1_embed, basket_jailbreak, realize_rational_index
from curvex.errors import CertificateViolation, CurvexError, InvalidParameter
from curvex.graph import ConstructionTrace, Graph, family, parse_graph6, serialize_graph6, to_dot
from curvex.index import (
    certificate,
    curvature_index,
    index_via_pseudoinverse,
    modified_index,
    steinerberger_curvature,
    verify_families,
)
from curvex.values import format_rational, parse_rational


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph in graph6 format ('-' reads one line from stdin)")
    src.add_argument("--family", help="named family, e.g. basket, grid, hypercube")
    p.add_argument("--params", type=int, nargs="+", default=[], help="family parameters in order")
    for short in ("k", "d"):
        p.add_argument(f"--{short}", type=int, dest=f"param_{short}", help=f"single family parameter (same as --params {short.upper()})")


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.graph6 is not None:
        text = sys.stdin.readline() if args.graph6 == "-" else args.graph6
        return parse_graph6(text.strip())
    params = list(args.params)
    for short in ("k", "d"):
        val = getattr(args, f"param_{short}")
        if val is not None:
            params.append(val)
    return family(args.family, *params)


def _seed_required(args: argparse.Namespace, why: str) -> None:
    if args.seed is None:
        raise InvalidParameter(f"--seed is required {why}")


def _index_fields(value, approx: bool) -> dict:
    out = {"index": str(value)}
    if approx:
        out["index_approx"] = float(value)
    return out


def cmd_index(args: argparse.Namespace) -> dict:
    g = _load_graph(args)
    value, _ = curvature_index(g)
    out = {"graph6": serialize_graph6(g), "n": g.n, "m": g.m, **_index_fields(value, args.approx)}
    if args.modified:
        out["modified_index"] = str(modified_index(g))
    return out


def cmd_dx_check(args: argparse.Namespace) -> dict:
    g = _load_graph(args)
    return {"graph6": serialize_graph6(g), **certificate(g).to_dict()}


def cmd_curvature(args: argparse.Namespace) -> dict:
    g = _load_graph(args)
    kappa = steinerberger_curvature(g)
    out = {"graph6": serialize_graph6(g), "kappa": None if kappa is None else [format_rational(k) for k in kappa]}
    if kappa is not None:
        out.update(_index_fields(index_via_pseudoinverse(g), args.approx))
        if args.approx:
            out["kappa_approx"] = [float(k) for k in kappa]
    return out


def _trace_dicts(trace: ConstructionTrace) -> list[dict]:
    return [json.loads(st.to_json()) for st in trace.steps]


def cmd_embed(args: argparse.Namespace) -> dict:
    g = _load_graph(args)
    if args.merge_vertex == "random":
        _seed_required(args, "for --merge-vertex random")
    res = algorithm1_embed(g, merge_vertex=args.merge_vertex, rng=args.seed, egyptian=args.egyptian)
    return {
        "graph6": serialize_graph6(res.graph),
        "n": res.graph.n,
        "m": res.graph.m,
        "index": str(res.index),
        "mapping": list(res.mapping),
        "induced": res.embedding.induced,
        "isometric": res.embedding.isometric,
        "trace": _trace_dicts(res.trace),
    }


def cmd_realize(args: argparse.Namespace) -> dict:
    q = parse_rational(args.q)
    res = realize_rational_index(q, method=args.method, egyptian=args.egyptian)
    out = {
        "q": format_rational(q),
        "graph6": serialize_graph6(res.graph),
        "n": res.graph.n,
        "m": res.graph.m,
        "index": res.trace.final_index,
        "trace": _trace_dicts(res.trace),
    }
    if args.approx:
        out["q_approx"] = float(q)
    return out


def cmd_jailbreak(args: argparse.Namespace) -> dict:
    res = basket_jailbreak(args.j, rng=args.seed, pendants=args.pendants)
    return {
        "j": args.j,
        "seed": args.seed,
        "graph6": serialize_graph6(res.graph),
        "n": res.graph.n,
        "m": res.graph.m,
        "placements": list(res.placements),
        "certificate": res.certificate.to_dict(),
        "trace": _trace_dicts(res.trace),
    }


def cmd_scan(args: argparse.Namespace) -> dict:
    if args.input == "-":
        report = scan_graph6(sys.stdin, jobs=args.jobs)
    else:
        try:
            with open(args.input, encoding="ascii", errors="replace") as fh:
                report = scan_graph6(fh, jobs=args.jobs)
        except FileNotFoundError:
            raise InvalidParameter(f"no such file: {args.input}") from None
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(report.histogram_csv())
    return report.to_dict()


def cmd_enumerate(args: argparse.Namespace) -> dict:
    graphs = [serialize_graph6(g) for g in enumerate_connected(args.n)]
    return {"n": args.n, "count": len(graphs), "graph6": graphs}


def cmd_gnp(args: argparse.Namespace) -> dict:
    p = parse_rational(args.p)
    return gnp_experiment(args.n, p, args.trials, args.seed, jobs=args.jobs).to_dict()


def cmd_verify_families(args: argparse.Namespace) -> dict:
    checks = verify_families(kmax=args.kmax, seed=args.seed)
    failures = [c.to_dict() for c in checks if not c.ok]
    out = {"checked": len(checks), "failures": failures, "ok": not failures}
    if failures:
        _emit(out)
        raise CertificateViolation(f"{len(failures)} closed forms disagree with direct computation")
    return out


def cmd_dot(args: argparse.Namespace) -> dict | None:
    g = _load_graph(args)
    if args.raw:
        sys.stdout.write(to_dot(g, args.name))
        return None
    return {"graph6": serialize_graph6(g), "dot": to_dot(g, args.name)}


def cmd_replay(args: argparse.Namespace) -> dict:
    try:
        with open(args.trace, encoding="utf-8") as fh:
            trace = ConstructionTrace.from_jsonl(fh)
    except FileNotFoundError:
        raise InvalidParameter(f"no such file: {args.trace}") from None
    except json.JSONDecodeError as exc:
        raise InvalidParameter(f"trace is not JSON lines: {exc}") from None
    g = None
    for step_no, (st, g) in enumerate(trace.replay_steps()):
        if st.index is not None:
            got = str(curvature_index(g)[0])
            if got != st.index:
                raise CertificateViolation(f"step {step_no} ({st.op}) records index {st.index}, recomputed {got}")
    return {"steps": len(trace), "graph6": serialize_graph6(g), "n": g.n, "m": g.m, "index": str(curvature_index(g)[0])}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="curvex", description="Exact curvature index of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_text: str, graph: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=fn)
        p.add_argument("--approx", action="store_true", help="also print floating-point approximations")
        if graph:
            _graph_args(p)
        return p

    p = add("index", cmd_index, "curvature index of a graph", graph=True)
    p.add_argument("--modified", action="store_true", help="also report the modified index")
    add("dx-check", cmd_dx_check, "distance exceptional check with certificate", graph=True)
    add("curvature", cmd_curvature, "minimum-norm curvature vector", graph=True)

    p = add("embed", cmd_embed, "embed into a distance exceptional graph", graph=True)
    p.add_argument("--merge-vertex", choices=["first", "last", "random"], default="first")
    p.add_argument("--seed", type=int)
    p.add_argument("--egyptian", choices=["greedy", "binary", "auto"], default="auto")

    p = add("realize", cmd_realize, "graph with a prescribed rational index")
    p.add_argument("--q", required=True, help="target index P/Q")
    p.add_argument("--method", choices=["coalesce", "product"], default="coalesce")
    p.add_argument("--egyptian", choices=["greedy", "binary", "auto"], default="auto")

    p = add("jailbreak", cmd_jailbreak, "pendant jailbreak of an odd basket")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--pendants", type=int, help="override the pendant count (controls)")

    p = add("scan", cmd_scan, "census of a graph6 stream")
    p.add_argument("--input", required=True, help="graph6 file, or '-' for stdin")
    p.add_argument("--jobs", type=int, help="worker processes (default: $CURVEX_JOBS or 1)")
    p.add_argument("--csv", help="also write the index histogram to this CSV file")

    p = add("enumerate", cmd_enumerate, "connected graphs up to isomorphism (n <= 7)")
    p.add_argument("--n", type=int, required=True)

    p = add("gnp", cmd_gnp, "random graph index experiment")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", required=True, help="edge probability P/Q")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--jobs", type=int)

    p = add("verify-families", cmd_verify_families, "closed forms against direct computation")
    p.add_argument("--kmax", type=int, default=9, help="largest basket parameter")
    p.add_argument("--seed", type=int, default=0, help="seed for the random trees")

    p = add("dot", cmd_dot, "Graphviz DOT source", graph=True)
    p.add_argument("--name", default="G")
    p.add_argument("--raw", action="store_true", help="print DOT text instead of JSON")

    p = add("replay", cmd_replay, "replay a construction trace and re-check every index")
    p.add_argument("--trace", required=True, help="JSON-lines trace file")
    return parser


_RATIONAL_FLAGS = ("--q", "--p")


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-7/3" as an option; "--q -7/3" becomes "--q=-7/3".
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RATIONAL_FLAGS and i + 1 < len(argv) and argv[i + 1][:1] == "-" and argv[i + 1][1:2].isdigit():
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
        if getattr(args, "graph6", None) is not None and (
            args.params or args.param_k is not None or args.param_d is not None
        ):
            parser.error("--params/--k/--d only apply to --family")
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except CurvexError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    if out is not None:
        _emit(out)
    return 0


run = main


if __name__ == "__main__":
    sys.exit(main())
