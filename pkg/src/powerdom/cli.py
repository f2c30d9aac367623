"""Command line frontend.

Subcommands cover the whole toolkit: parsing and generating graphs,
running the observation process, exact solving, bound reports, trail and
tree certificates, and the counterexample demo table. Every subcommand
accepts `--json` for machine-readable output and `-` as the input path to
read the graph from stdin.

Exit codes: 0 success, 1 usage or parse error, 2 solver work limit
exceeded, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import families
from .bounds import bounds_report
from .errors import (
    InternalConsistencyError,
    PowerdomError,
    SearchBudgetExceeded,
)
from .graph import Graph, diameter, max_degree, parse_graph, write_graph
from .propagation import is_pds, propagate
from .solver import DEFAULT_WORK_LIMIT, gamma_p, l_round_number, ppt_graph
from .trails import extract_monotone_trail
from .tree_analysis import verify_tree_diameter_bound

# largest delta solved exactly by the demo; beyond it gamma_P = 2 is
# certified by the 2-set witness plus exhaustive singleton refutation
EXACT_DEMO_DELTA = 12


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; we reserve 2 for
    resource limits, so remap usage errors to 1 (--help keeps 0)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator} ≈ {float(q):.3f}"


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _parse_vertex_set(text: str) -> list:
    try:
        return [int(part) for part in text.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"bad vertex list {text!r}; expected e.g. 0,3,7")


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def counterexample_demo(
    delta_min: int, delta_max: int, work_limit: int = DEFAULT_WORK_LIMIT
) -> list:
    """One report row per delta in [delta_min, delta_max].

    gamma_P is computed exactly through delta = 12; for larger delta the
    value 2 is certified instead: the standard 2-set witness must power
    dominate and every singleton must fail, which together pin gamma_P = 2
    without enumerating all pairs. Verdicts compare exact rationals; the
    decimal rendering is display-only.
    """
    if not (3 <= delta_min <= delta_max):
        raise ValueError(f"need 3 <= from <= to, got {delta_min}..{delta_max}")
    rows = []
    for delta in range(delta_min, delta_max + 1):
        g, spec = families.gen_h_delta(delta)
        diam = diameter(g)
        deg = max_degree(g)
        if delta <= EXACT_DEMO_DELTA:
            gamma = gamma_p(g, work_limit=work_limit).gamma_p
            mode = "exact"
        else:
            witness = {0, delta + 1}
            if not is_pds(g, witness):
                raise InternalConsistencyError(
                    f"construction witness {sorted(witness)} fails for delta={delta}"
                )
            full = g.full_mask
            for v in range(g.n):
                final, _ = g.core.fixed_point(1 << v)
                if final == full:
                    raise InternalConsistencyError(
                        f"singleton {{{v}}} power dominates H_{delta}"
                    )
            gamma = 2
            mode = "certified"
        refuted = Fraction(g.n, diam * deg + 1)
        rows.append(
            {
                "delta": delta,
                "n": g.n,
                "diam": diam,
                "max_degree": deg,
                "gamma_p": gamma,
                "gamma_mode": mode,
                "refuted_bound": refuted,
                "refutation_flag": refuted > gamma,
            }
        )
    return rows


def _cmd_gamma(args) -> int:
    g = _read_graph(args.graph)
    result = gamma_p(g, work_limit=args.limit)
    lines = [f"gamma_p = {result.gamma_p}", f"ppt = {result.ppt_graph}", "witnesses:"]
    for w in result.witnesses:
        lines.append(f"  {{{', '.join(map(str, w.vertices))}}} ppt={w.ppt}")
    _emit(args, result.to_json_dict(), "\n".join(lines))
    return 0


def _cmd_ppt(args) -> int:
    g = _read_graph(args.graph)
    value = ppt_graph(g, work_limit=args.limit)
    _emit(args, {"ppt_graph": value}, f"ppt = {value}")
    return 0


def _cmd_propagate(args) -> int:
    g = _read_graph(args.graph)
    trace = propagate(g, _parse_vertex_set(args.set))
    lines = []
    for i, layer in enumerate(trace.layers):
        lines.append(f"[{i}] {{{', '.join(map(str, sorted(layer)))}}}")
    if trace.complete:
        lines.append(f"complete, ppt = {trace.steps}")
    else:
        lines.append(f"stalled after {trace.steps} steps; not a power dominating set")
    _emit(args, trace.to_json_dict(), "\n".join(lines))
    return 0


def _cmd_lround(args) -> int:
    g = _read_graph(args.graph)
    value = l_round_number(g, args.l, work_limit=args.limit)
    _emit(
        args,
        {"l": args.l, "l_round_number": value},
        f"l-round power domination number (l={args.l}) = {value}",
    )
    return 0


def _cmd_bounds(args) -> int:
    g = _read_graph(args.graph)
    rep = bounds_report(g, work_limit=args.limit)
    verdict = "REFUTES" if rep.refutation_flag else "consistent"
    lines = [
        f"n = {rep.n}, max_degree = {rep.max_degree}, diameter = {rep.diameter}",
        f"gamma_p = {rep.gamma_p}, ppt = {rep.ppt_graph}",
        f"correct lower bound n/(ppt*maxdeg+1) = {_fmt_fraction(rep.correct_bound_raw)}",
        f"diameter-based bound n/(diam*maxdeg+1) = {_fmt_fraction(rep.refuted_bound_raw)}"
        f" [{verdict}]",
        f"ppt lower bound = {rep.ppt_lower_bound}",
    ]
    if rep.tree_bound is not None:
        lines.append(f"tree lower bound = {rep.tree_bound}")
    _emit(args, rep.to_json_dict(), "\n".join(lines))
    return 0


def _cmd_gen(args) -> int:
    if args.family == "hdelta":
        g, _ = families.gen_h_delta(args.delta)
        header = f"# family: hdelta delta={args.delta}"
    elif args.family == "path":
        g = families.gen_path(args.n)
        header = f"# family: path n={args.n}"
    elif args.family == "cycle":
        g = families.gen_cycle(args.n)
        header = f"# family: cycle n={args.n}"
    elif args.family == "star":
        g = families.gen_star(args.k)
        header = f"# family: star k={args.k}"
    elif args.family == "complete":
        g = families.gen_complete(args.n)
        header = f"# family: complete n={args.n}"
    elif args.family == "spider":
        g = families.gen_spider(args.legs, getattr(args, "len"))
        header = f"# family: spider legs={args.legs} len={getattr(args, 'len')}"
    elif args.family == "rtree":
        g = families.gen_random_tree(args.n, args.seed)
        header = f"# family: rtree n={args.n} seed={args.seed}"
    else:  # pragma: no cover - argparse enforces the choices
        raise ValueError(f"unknown family {args.family}")
    if args.json:
        print(
            json.dumps(
                {"n": g.n, "m": g.edge_count, "edges": [list(e) for e in g.edges()]},
                indent=2,
            )
        )
    else:
        print(header)
        sys.stdout.write(write_graph(g))
    return 0


def _cmd_trail(args) -> int:
    g = _read_graph(args.graph)
    trace = propagate(g, _parse_vertex_set(args.set))
    trail = extract_monotone_trail(g, trace, args.vertex)
    payload = trail.to_json_dict()
    payload["vertex"] = args.vertex
    payload["time_label"] = trace.time_label[args.vertex]
    human = (
        f"trail: {' '.join(map(str, trail.vertices))}\n"
        f"edge labels: {' '.join(map(str, trail.edge_labels))}\n"
        f"length {trail.length} >= t({args.vertex})+1 = {trace.time_label[args.vertex] + 1}"
    )
    _emit(args, payload, human)
    return 0


def _cmd_verify_tree(args) -> int:
    g = _read_graph(args.graph)
    cert = verify_tree_diameter_bound(g)
    human = (
        f"ppt = {cert.ppt_repaired}, diam = {cert.diam}: "
        f"ppt <= diam-1 holds\n"
        f"witness set {sorted(cert.repaired_set)} "
        f"(repaired from {sorted(cert.original_set)})\n"
        f"witness path: {' '.join(map(str, cert.witness_trail.vertices))}"
    )
    _emit(args, cert.to_json_dict(), human)
    return 0


def _cmd_demo(args) -> int:
    rows = counterexample_demo(args.delta_min, args.delta_max, work_limit=args.limit)
    if args.json:
        payload = []
        for r in rows:
            q = r["refuted_bound"]
            payload.append(
                {
                    **{k: r[k] for k in ("delta", "n", "diam", "max_degree")},
                    "gamma_p": r["gamma_p"],
                    "gamma_mode": r["gamma_mode"],
                    "refuted_bound": {"num": q.numerator, "den": q.denominator},
                    "refutation_flag": r["refutation_flag"],
                }
            )
        print(json.dumps(payload, indent=2))
        return 0
    head = f"{'delta':>5}  {'n':>4}  {'diam':>4}  {'maxdeg':>6}  {'gamma_p':>18}  {'bound':>16}  verdict"
    print(head)
    for r in rows:
        gamma_col = f"{r['gamma_p']} ({r['gamma_mode']})"
        verdict = "REFUTES" if r["refutation_flag"] else "consistent"
        print(
            f"{r['delta']:>5}  {r['n']:>4}  {r['diam']:>4}  {r['max_degree']:>6}  "
            f"{gamma_col:>18}  {_fmt_fraction(r['refuted_bound']):>16}  {verdict}"
        )
    return 0


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument(
        "--limit",
        type=int,
        default=DEFAULT_WORK_LIMIT,
        metavar="N",
        help="solver work cap in propagation runs",
    )

    parser = _Parser(prog="powerdom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("gamma", parents=[common], help="exact power domination number")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("ppt", parents=[common], help="power propagation time of the graph")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_ppt)

    p = sub.add_parser("propagate", parents=[common], help="run observation from a seed set")
    p.add_argument("--set", required=True, metavar="IDS", help="comma separated vertex ids")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_propagate)

    p = sub.add_parser("lround", parents=[common], help="l-round power domination number")
    p.add_argument("--l", required=True, type=int)
    p.add_argument("graph")
    p.set_defaults(func=_cmd_lround)

    p = sub.add_parser("bounds", parents=[common], help="lower bound report")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("gen", parents=[common], help="generate a named graph family")
    fam = p.add_subparsers(dest="family", required=True, metavar="FAMILY")
    f = fam.add_parser("hdelta", parents=[common])
    f.add_argument("--delta", required=True, type=int)
    f = fam.add_parser("path", parents=[common])
    f.add_argument("--n", required=True, type=int)
    f = fam.add_parser("cycle", parents=[common])
    f.add_argument("--n", required=True, type=int)
    f = fam.add_parser("star", parents=[common])
    f.add_argument("--k", required=True, type=int)
    f = fam.add_parser("complete", parents=[common])
    f.add_argument("--n", required=True, type=int)
    f = fam.add_parser("spider", parents=[common])
    f.add_argument("--legs", required=True, type=int)
    f.add_argument("--len", required=True, type=int)
    f = fam.add_parser("rtree", parents=[common])
    f.add_argument("--n", required=True, type=int)
    f.add_argument("--seed", required=True, type=int)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("trail", parents=[common], help="extract a monotone trail")
    p.add_argument("--set", required=True, metavar="IDS")
    p.add_argument("--vertex", required=True, type=int)
    p.add_argument("graph")
    p.set_defaults(func=_cmd_trail)

    p = sub.add_parser("verify-tree", parents=[common], help="certify ppt <= diam-1 on a tree")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_verify_tree)

    p = sub.add_parser("demo", parents=[common], help="counterexample family report")
    p.add_argument("--from", dest="delta_min", required=True, type=int, metavar="D1")
    p.add_argument("--to", dest="delta_max", required=True, type=int, metavar="D2")
    p.set_defaults(func=_cmd_demo)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 0 if code is None else 1
    try:
        return args.func(args)
    except SearchBudgetExceeded as exc:
        print(f"powerdom: work limit exceeded: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"powerdom: internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except (PowerdomError, ValueError, OSError) as exc:
        print(f"powerdom: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
