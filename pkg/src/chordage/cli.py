"""Command-line front door: analyze graphs, generate families, run
theorem-verification sweeps.

``analyze`` prints one JSON report object on stdout and a human summary
on stderr. Exit codes: 0 success, 1 property violation, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .bondage import (
    BONDAGE_EDGE_LIMIT,
    BONDAGE_VERTEX_LIMIT,
    bondage,
    upper_bound_report,
)
from .certify import (
    DirectWitness,
    EdgeCertificate,
    PairCertificate,
    extract_certificate,
    format_diagnostic_bundle,
)
from .chordal import ALL_CLIQUES_LIMIT, is_chordal, max_clique
from .domination import GAMMA_VERTEX_LIMIT, gamma
from .edgelist import EdgeListParseError, format_edge_list, read_edge_list
from .errors import BondageUndefined, GraphError, LimitExceeded
from .families import (
    cartesian_product,
    clique,
    corona,
    cycle,
    path,
    random_block_graph,
    random_chordal,
    random_tree,
    star,
)
from .graph import Graph, degree_stats, is_complete, is_connected
from .verify import SUITE_NAMES, run_suite


def report_to_json(report: dict) -> str:
    """Canonical report serialization: 2-space indent, insertion order,
    trailing newline. Byte-identical under a parse/serialize round trip."""
    return json.dumps(report, indent=2) + "\n"


def _certificate_dict(cert) -> dict:
    if isinstance(cert, PairCertificate):
        return {"type": "pair", "u": cert.u, "v": cert.v, "bound": cert.bound}
    if isinstance(cert, EdgeCertificate):
        return {"type": "edge", "u": cert.u, "v": cert.v, "bound": cert.bound}
    if isinstance(cert, DirectWitness):
        return {
            "type": "edge-set",
            "edges": [list(e) for e in cert.edges],
            "size": len(cert.edges),
        }
    raise TypeError(type(cert))


def analyze_graph(
    g: Graph,
    input_desc: dict,
    limit_bondage_n: int = BONDAGE_VERTEX_LIMIT,
    limit_bondage_m: int = BONDAGE_EDGE_LIMIT,
    limit_gamma_n: int = GAMMA_VERTEX_LIMIT,
    limit_cliques_n: int = ALL_CLIQUES_LIMIT,
    emit_certificate: bool = False,
) -> dict:
    """Build the analyze report dict; skipped stages are marked, absent
    fields are omitted rather than null."""
    report: dict = {"input": input_desc, "n": g.n, "m": g.m}
    timings: dict = {}

    t0 = time.perf_counter()
    chordal, hole = is_chordal(g)
    timings["chordality"] = round((time.perf_counter() - t0) * 1000, 3)
    report["is_chordal"] = chordal
    if hole is not None:
        report["hole"] = list(hole.cycle)
    report["is_clique"] = is_complete(g)
    delta_min, delta_max, _ = degree_stats(g)
    report["delta_min"] = delta_min
    report["delta_max"] = delta_max

    t0 = time.perf_counter()
    omega, clique_witness = max_clique(g)
    timings["omega"] = round((time.perf_counter() - t0) * 1000, 3)
    report["omega"] = omega
    report["max_clique"] = sorted(clique_witness)

    t0 = time.perf_counter()
    if g.n <= limit_gamma_n:
        dom = gamma(g, limit=limit_gamma_n)
        report["gamma"] = dom.gamma
        report["gamma_witness"] = sorted(dom.witness)
    else:
        report["gamma"] = "skipped: limit"
    timings["gamma"] = round((time.perf_counter() - t0) * 1000, 3)

    t0 = time.perf_counter()
    report["bounds"] = upper_bound_report(g).as_dict()
    timings["bounds"] = round((time.perf_counter() - t0) * 1000, 3)

    t0 = time.perf_counter()
    if g.m == 0:
        report["bondage"] = "undefined"
    elif g.n > limit_bondage_n or g.m > limit_bondage_m:
        report["bondage"] = "skipped: limit"
    else:
        res = bondage(g, limit_n=limit_bondage_n, limit_m=limit_bondage_m)
        report["bondage"] = res.b
        report["bondage_witness"] = [list(e) for e in res.witness]
    timings["bondage"] = round((time.perf_counter() - t0) * 1000, 3)

    if emit_certificate:
        t0 = time.perf_counter()
        if chordal and is_connected(g) and not is_complete(g) and g.n <= limit_cliques_n:
            cert = extract_certificate(g, limit=limit_cliques_n)
            report["certificate"] = _certificate_dict(cert)
        else:
            report["certificate"] = "skipped: not applicable"
        timings["certificate"] = round((time.perf_counter() - t0) * 1000, 3)

    report["timings_ms"] = timings
    return report


def _human_summary(report: dict) -> str:
    parts = [f"n={report['n']} m={report['m']}"]
    parts.append(f"chordal={report['is_chordal']}")
    parts.append(f"omega={report['omega']}")
    parts.append(f"gamma={report['gamma']}")
    parts.append(f"bondage={report.get('bondage', 'n/a')}")
    return " ".join(str(p) for p in parts)


def _parse_graph_spec(spec: str) -> Graph:
    """Tiny recursive grammar for generator arguments:
    ``path:N | cycle:N | clique:N | star:N | corona(S,S) | cartesian(S,S)``.
    """
    spec = spec.strip()
    if "(" in spec:
        name, _, rest = spec.partition("(")
        if not rest.endswith(")"):
            raise GraphError(f"unbalanced parentheses in graph spec {spec!r}")
        inner = rest[:-1]
        depth = 0
        split = -1
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                split = i
                break
        if split < 0:
            raise GraphError(f"graph spec {spec!r} needs two operands")
        left = _parse_graph_spec(inner[:split])
        right = _parse_graph_spec(inner[split + 1 :])
        ops = {"corona": corona, "cartesian": cartesian_product}
        if name.strip() not in ops:
            raise GraphError(f"unknown graph operation {name.strip()!r}")
        return ops[name.strip()](left, right)
    name, _, arg = spec.partition(":")
    makers = {"path": path, "cycle": cycle, "clique": clique, "star": star}
    if name not in makers:
        raise GraphError(f"unknown graph family {name!r} in spec {spec!r}")
    try:
        n = int(arg)
    except ValueError:
        raise GraphError(f"graph spec {spec!r} needs an integer size") from None
    return makers[name](n)


def _parse_n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        value = int(text)
        return value, value
    return int(lo), int(hi)


def cmd_analyze(args) -> int:
    try:
        g = read_edge_list(args.input)
    except EdgeListParseError as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return 2
    report = analyze_graph(
        g,
        {"path": args.input},
        limit_bondage_n=args.limit_bondage_n,
        limit_bondage_m=args.limit_bondage_m,
        limit_gamma_n=args.limit_gamma_n,
        limit_cliques_n=args.limit_cliques_n,
        emit_certificate=args.emit_certificate,
    )
    sys.stdout.write(report_to_json(report))
    print(_human_summary(report), file=sys.stderr)
    return 0


def cmd_generate(args) -> int:
    seed = args.seed
    family = args.family
    try:
        if family in ("path", "cycle", "clique", "star"):
            g = {"path": path, "cycle": cycle, "clique": clique, "star": star}[family](
                args.n
            )
        elif family == "corona":
            if args.base is None:
                raise GraphError("corona requires --base")
            g = corona(_parse_graph_spec(args.base), _parse_graph_spec(args.attach))
        elif family == "cartesian":
            if args.left is None or args.right is None:
                raise GraphError("cartesian requires --left and --right")
            g = cartesian_product(
                _parse_graph_spec(args.left), _parse_graph_spec(args.right)
            )
        elif family == "random-tree":
            g = random_tree(args.n, seed)
        elif family == "random-chordal":
            g = random_chordal(args.n, args.density, seed)
        elif family == "random-block":
            g = random_block_graph(args.n, seed)
        else:
            raise GraphError(f"unknown family {family!r}")
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = format_edge_list(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    n_range = _parse_n_range(args.n_range) if args.n_range else None
    try:
        results = run_suite(args.suite, args.count, n_range, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    failures = [r for r in results if not r.passed]
    for r in results:
        status = "pass" if r.passed else "FAIL"
        detail = f" {r.detail}" if (not r.passed and r.detail) else ""
        print(f"[{r.index:4d}] {status} {r.description}{detail}")
    print(
        f"suite {args.suite}: {len(results) - len(failures)}/{len(results)} passed"
    )
    if failures:
        os.makedirs(args.diagnostics_dir, exist_ok=True)
        for r in failures:
            bundle_path = os.path.join(
                args.diagnostics_dir, f"{args.suite}-{r.index:04d}.txt"
            )
            with open(bundle_path, "w", encoding="utf-8", newline="\n") as fh:
                if r.graph is not None:
                    fh.write(format_edge_list(r.graph, comment=r.description))
                fh.write(f"# detail: {r.detail}\n")
            print(f"diagnostic bundle: {bundle_path}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordage",
        description="Exact bondage-number solver and structural certifier "
        "for chordal graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze an edge-list file")
    p_an.add_argument("input", help="edge-list file path")
    p_an.add_argument("--limit-bondage-n", type=int, default=BONDAGE_VERTEX_LIMIT)
    p_an.add_argument("--limit-bondage-m", type=int, default=BONDAGE_EDGE_LIMIT)
    p_an.add_argument("--limit-gamma-n", type=int, default=GAMMA_VERTEX_LIMIT)
    p_an.add_argument("--limit-cliques-n", type=int, default=ALL_CLIQUES_LIMIT)
    p_an.add_argument("--emit-certificate", action="store_true")
    p_an.set_defaults(fn=cmd_analyze)

    p_gen = sub.add_parser("generate", help="write a graph family instance")
    p_gen.add_argument(
        "family",
        choices=[
            "path",
            "cycle",
            "clique",
            "star",
            "corona",
            "cartesian",
            "random-tree",
            "random-chordal",
            "random-block",
        ],
    )
    p_gen.add_argument("-n", type=int, default=4, help="vertex count parameter")
    p_gen.add_argument("-d", "--density", type=float, default=0.3)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--base", help="graph spec, e.g. clique:4")
    p_gen.add_argument("--attach", default="clique:1", help="corona attachment spec")
    p_gen.add_argument("--left", help="left operand spec for cartesian")
    p_gen.add_argument("--right", help="right operand spec for cartesian")
    p_gen.add_argument("-o", "--output", help="output path (default stdout)")
    p_gen.set_defaults(fn=cmd_generate)

    p_ver = sub.add_parser("verify", help="run a theorem-verification sweep")
    p_ver.add_argument("suite", choices=list(SUITE_NAMES))
    p_ver.add_argument("--count", type=int, default=None)
    p_ver.add_argument("--n-range", help="e.g. 4..13")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--diagnostics-dir", default="diagnostics")
    p_ver.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (GraphError, LimitExceeded, BondageUndefined) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
