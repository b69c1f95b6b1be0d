"""Command-line interface: constructions, verification, oracles, reports.

Exit codes: 0 success/found, 1 negative verdict, 2 usage or input error,
3 search budget exhausted.  Errors are also emitted as JSON diagnostics on
stderr.  Artifacts are byte-identical across runs for identical parameters
and seeds.

Named patterns (usable wherever a file path is accepted):
``K<a><b>`` complete bipartite (single digits), ``K<k>`` clique, ``C<k>``
cycle, ``P<k>`` path with k edges, ``W<k>``/``wheel<k>`` wheel,
``octahedron``, ``cube``, ``Ht<t>`` the 2t-triple pattern, and any graph name
with the suffix ``plus`` for its expansion (``K3plus``, ``K33plus``, ...).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import acceptance
from .constructions import (layered_girth_construction, projective_norm_graph,
                            quotient_norm_graph, random_deletion_construction,
                            sigma_construction, triangle_hypergraph)
from .embedding import (BUDGET_EXHAUSTED, contains_expansion, graph_embed,
                        triple_embed)
from .errors import Turan3Error, UnknownName
from .fields import build_field, build_tower, norm_fiber
from .graphs import Graph, clique, complete_bipartite, cube, cycle, octahedron, path, wheel
from .oracle import ex2_bruteforce, ex3_bruteforce, golden_key, record_or_check
from .triples import TripleSystem, expand, h_t_pattern

_GRAPH_NAMES = {
    "octahedron": octahedron,
    "cube": cube,
}


def _parse_named(name: str):
    """Resolve a named pattern to a Graph or TripleSystem."""
    low = name.lower()
    if low.endswith("plus"):
        base = _parse_named(name[:-4])
        if not isinstance(base, Graph):
            raise UnknownName(f"cannot expand non-graph pattern {name!r}")
        return expand(base)
    if low in _GRAPH_NAMES:
        return _GRAPH_NAMES[low]()
    m = re.fullmatch(r"[Hh]t(\d+)", name)
    if m:
        return h_t_pattern(int(m.group(1)))
    m = re.fullmatch(r"[Kk](\d)(\d)", name)
    if m:
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"[Kk](\d+)", name)
    if m:
        return clique(int(m.group(1)))
    m = re.fullmatch(r"[Cc](\d+)", name)
    if m:
        return cycle(int(m.group(1)))
    m = re.fullmatch(r"[Pp](\d+)", name)
    if m:
        return path(int(m.group(1)))
    m = re.fullmatch(r"(?:[Ww]|wheel)(\d+)", name)
    if m:
        return wheel(int(m.group(1)))
    m = re.fullmatch(r"clique(\d+)", low)
    if m:
        return clique(int(m.group(1)))
    raise UnknownName(f"unknown pattern name {name!r}")


def resolve_pattern(name_or_path: str):
    """A named pattern, or a .g/.h3 file sniffed by its header."""
    if os.path.exists(name_or_path):
        with open(name_or_path) as fh:
            text = fh.read()
        head = text.split(None, 1)[0] if text.split() else ""
        if head == "g":
            return Graph.from_text(text)
        if head == "h3":
            return TripleSystem.from_text(text)
        raise Turan3Error(f"unrecognised file header in {name_or_path!r}")
    return _parse_named(name_or_path)


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        for key, val in obj.items():
            print(f"{key}: {val}")


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        fh.write(text)


def _default_budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("TURAN3_BUDGET")
    return int(env) if env else None


# -- subcommands ------------------------------------------------------------------


def cmd_field(args) -> int:
    ctx = build_field(args.p, args.m)
    out = {
        "p": ctx.p,
        "m": ctx.m,
        "order": ctx.q,
        "modulus": list(ctx.modulus),
        "generator": ctx.generator,
    }
    if args.tower_s is not None:
        tower = build_tower(args.p, args.m, args.tower_s)
        out["extension-order"] = tower.ext_order
        out["fiber-size"] = (tower.ext_order - 1) // (ctx.q - 1)
        out["fibers"] = {
            str(c): [e.code for e in norm_fiber(tower, ctx.element(c))]
            for c in range(1, ctx.q)
        }
    _emit(out, args.format)
    return 0


def cmd_construct(args) -> int:
    out_dir = Path(args.out_dir)
    if args.what == "pg":
        g, report = projective_norm_graph(args.q, args.s)
        ts, treport = triangle_hypergraph(g, pg_params=(args.q, args.s))
        report.checks.extend(treport.checks)
        stem = f"pg_{args.q}_{args.s}"
        _write(out_dir / f"{stem}.g", g.to_text())
        _write(out_dir / f"{stem}.h3", ts.to_text())
    elif args.what == "hrq":
        g, report = quotient_norm_graph(args.q, args.r)
        stem = f"hrq_{args.q}_{args.r}"
        _write(out_dir / f"{stem}.g", g.to_text())
    elif args.what == "sigma":
        ts = sigma_construction(args.n, args.sigma)
        from .constructions import ConstructionReport

        report = ConstructionReport("sigma_construction",
                                    {"n": args.n, "sigma": args.sigma}, ts.n, ts.m)
        expected = (args.sigma - 1) * (ts.n - args.sigma + 1) * (ts.n - args.sigma) // 2
        report.add("triple-count-formula", "sigma.count-formula",
                   ts.m, expected, ts.m == expected)
        stem = f"sigma_{args.n}_{args.sigma}"
        _write(out_dir / f"{stem}.h3", ts.to_text())
    elif args.what == "girth-layers":
        ts, report = layered_girth_construction(args.n, args.k, args.seed)
        stem = f"girthlayers_{args.n}_{args.k}_{args.seed}"
        _write(out_dir / f"{stem}.h3", ts.to_text())
    elif args.what == "random-del":
        pattern = resolve_pattern(args.pattern)
        if not isinstance(pattern, Graph):
            raise Turan3Error("random-del needs a graph pattern")
        ts, report = random_deletion_construction(args.n, pattern, args.seed,
                                                  _default_budget(args))
        stem = f"randomdel_{args.n}_{args.pattern}_{args.seed}"
        _write(out_dir / f"{stem}.h3", ts.to_text())
    else:  # pragma: no cover
        raise Turan3Error(f"unknown construction {args.what!r}")
    _write(out_dir / f"{stem}.report.json", report.dumps())
    if args.format == "json":
        print(report.dumps(), end="")
    else:
        status = "ok" if report.all_pass() else "CHECK-FAILED"
        print(f"{report.name} n={report.n} m={report.m} [{status}] -> {out_dir / stem}.*")
    return 0 if report.all_pass() else 1


def cmd_verify(args) -> int:
    pattern = resolve_pattern(args.pattern)
    host = resolve_pattern(args.host)
    budget = _default_budget(args)
    if args.mode == "graph":
        if not isinstance(pattern, Graph) or not isinstance(host, Graph):
            raise Turan3Error("graph mode needs graph pattern and host")
        res = graph_embed(pattern, host, budget)
    elif args.mode == "triple":
        if not isinstance(pattern, TripleSystem) or not isinstance(host, TripleSystem):
            raise Turan3Error("triple mode needs triple-system pattern and host")
        res = triple_embed(pattern, host, budget)
    else:
        if not isinstance(pattern, Graph) or not isinstance(host, TripleSystem):
            raise Turan3Error("expansion mode needs a graph pattern and triple host")
        res = contains_expansion(pattern, host, budget)
    if res is BUDGET_EXHAUSTED:
        _emit({"verdict": "budget"}, args.format)
        return 3
    if res is None:
        _emit({"verdict": "none"}, args.format)
        return 1
    _emit({"verdict": "found", "map": {str(k): v for k, v in res.as_dict().items()}},
          args.format)
    return 0


def cmd_oracle(args) -> int:
    pattern = resolve_pattern(args.pattern)
    if args.r == 2:
        if not isinstance(pattern, Graph):
            raise Turan3Error("r=2 oracle needs a graph pattern")
        result = ex2_bruteforce(args.n, pattern, args.pattern,
                                canonical=not args.no_canonical)
    else:
        if not isinstance(pattern, TripleSystem):
            raise Turan3Error("r=3 oracle needs a triple-system pattern")
        result = ex3_bruteforce(args.n, pattern, args.pattern,
                                canonical=not args.no_canonical)
    out = result.to_json()
    if args.golden:
        key = golden_key(args.r, args.n, args.pattern)
        out["golden"] = record_or_check(args.golden, key, result.value,
                                        result.witness.to_text())
    _emit(out, args.format)
    return 0


def cmd_report(args) -> int:
    results = acceptance.run_suite(args.suite)
    all_pass = all(r["passed"] for r in results)
    consolidated = {"suite": args.suite, "all_pass": all_pass, "results": results}
    text = json.dumps(consolidated, indent=2, sort_keys=True) + "\n"
    if args.out:
        _write(Path(args.out), text)
    if args.format == "json":
        print(text, end="")
    else:
        for r in results:
            print(f"criterion {r['id']:2d} {r['name']:32s} "
                  f"{'PASS' if r['passed'] else 'FAIL'}  ({r['elapsed']}s)")
        print(f"suite {args.suite}: {'PASS' if all_pass else 'FAIL'}")
    return 0 if all_pass else 1


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="turan3", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--format", choices=("json", "text"), default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="build a field / norm tower and print its tables")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tower-s", type=int, default=None)
    p.set_defaults(fn=cmd_field)

    c = sub.add_parser("construct", help="run a construction and write artifacts")
    csub = c.add_subparsers(dest="what", required=True)
    pg = csub.add_parser("pg")
    pg.add_argument("--q", type=int, required=True)
    pg.add_argument("--s", type=int, required=True)
    hrq = csub.add_parser("hrq")
    hrq.add_argument("--q", type=int, required=True)
    hrq.add_argument("--r", type=int, required=True)
    sg = csub.add_parser("sigma")
    sg.add_argument("--n", type=int, required=True)
    sg.add_argument("--sigma", type=int, required=True)
    gl = csub.add_parser("girth-layers")
    gl.add_argument("--n", type=int, required=True)
    gl.add_argument("--k", type=int, required=True)
    gl.add_argument("--seed", type=int, default=0)
    rd = csub.add_parser("random-del")
    rd.add_argument("--n", type=int, required=True)
    rd.add_argument("--pattern", required=True)
    rd.add_argument("--seed", type=int, default=0)
    rd.add_argument("--budget", type=int, default=None)
    for sp in (pg, hrq, sg, gl, rd):
        sp.add_argument("--out-dir", default=".")
    c.set_defaults(fn=cmd_construct)

    v = sub.add_parser("verify", help="containment search between two objects")
    v.add_argument("--pattern", required=True)
    v.add_argument("--host", required=True)
    v.add_argument("--mode", choices=("graph", "triple", "expansion"), required=True)
    v.add_argument("--budget", type=int, default=None)
    v.set_defaults(fn=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive extremal value at tiny n")
    o.add_argument("--r", type=int, choices=(2, 3), required=True)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--pattern", required=True)
    o.add_argument("--golden", default=None)
    o.add_argument("--no-canonical", action="store_true",
                   help="disable isomorph rejection (small n only)")
    o.set_defaults(fn=cmd_oracle)

    r = sub.add_parser("report", help="run a named verification suite")
    r.add_argument("--suite", default="acceptance",
                   choices=sorted(acceptance.SUITES))
    r.add_argument("--out", default=None)
    r.set_defaults(fn=cmd_report)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except Turan3Error as exc:
        diag = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(diag), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
