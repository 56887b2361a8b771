"""Command-line front end: bounds, embeddings, tables, minimality reports.

Exit codes: 0 conclusive/success, 2 inconclusive (numerical search is
fallible by design), 1 errors and table mismatches.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import embedder as emb
from . import geometry, minimality
from .engine import (
    CROSSINGS,
    DIM,
    MODES,
    NON_CROSSING,
    SDIM,
    EmbedderBudget,
    Engine,
    EngineError,
    NEG_INF,
    known_sdim,
    RegistryMiss,
    wheel_dimension,
)
from .graphs import (
    FAMILY_TAGS,
    Graph,
    GraphError,
    enumerate_petals,
    family,
    format_graph_text,
    join_decompose,
    minor_closure,
    parse_graph_text,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


def fmt(value: float) -> str:
    return f"{value:.12f}"


def load_graph_argument(text: str) -> Graph:
    """A family literal such as K:4 or J(S:4,E:3), or a path to a graph file."""
    head = text.split("(")[0].split(":")[0].upper()
    if head in FAMILY_TAGS:
        return family(text)
    if os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            return parse_graph_text(fh.read())
    raise GraphError(
        f"{text!r} is neither a family literal (tags: {', '.join(FAMILY_TAGS)}) "
        "nor an existing file"
    )


def _graph_line(g: Graph) -> str:
    edges = ",".join(f"{u}-{v}" for u, v in g.edges)
    return f"n={g.vertex_count} edges=[{edges}]"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _mk_engine(args) -> Engine:
    return Engine(args.mode, use_embedder=not getattr(args, "no_embedder", False),
                  budget=EmbedderBudget(args.restarts, args.seed, args.tol))


def cmd_bounds(args, kind: str) -> int:
    g = load_graph_argument(args.graph)
    eng = _mk_engine(args)
    bounds = eng.bounds(g, kind)
    if args.json:
        print(json.dumps(bounds.to_json(), indent=2))
    else:
        if bounds.exact:
            print("-inf" if bounds.lower is NEG_INF else str(bounds.lower))
        else:
            hi = "unknown" if bounds.upper is None else str(bounds.upper)
            print(f"inconclusive: lower={bounds.lower} upper={hi}")
        if args.explain:
            for c in bounds.certificates:
                extra = f" {c.inputs}" if c.inputs else ""
                print(f"  [{c.side}] {c.bound} via {c.rule} ({c.anchor}){extra}",
                      file=sys.stderr)
    return EXIT_OK if bounds.exact else EXIT_INCONCLUSIVE


def cmd_embed(args) -> int:
    g = load_graph_argument(args.graph)
    req = emb.EmbedRequest(
        graph=g,
        ambient_dim=args.dim,
        on_sphere=args.on_sphere or args.sphere_radius is not None,
        sphere_radius=args.sphere_radius,
        forbid_crossings=(args.mode == NON_CROSSING),
        restarts=args.restarts,
        seed=args.seed,
        tolerance=args.tol,
    )
    found = emb.find_embedding(req)
    if found is None:
        print(f"inconclusive after {args.restarts} restarts")
        return EXIT_INCONCLUSIVE
    report = emb.validate(found, req)
    payload = found.to_json()
    payload["certificate"] = report.to_json()
    print(json.dumps(payload, indent=2))
    if args.svg:
        emb.save_projection(found, args.svg)
        print(f"wrote {args.svg}", file=sys.stderr)
    return EXIT_OK


def cmd_minors(args) -> int:
    g = load_graph_argument(args.graph)
    closure = minor_closure(g, proper_only=args.proper, cap=args.cap)
    if args.json:
        print(json.dumps([
            {"vertex_count": m.vertex_count, "edges": [list(e) for e in m.edges]}
            for m in closure
        ], indent=2))
    else:
        print(f"{len(closure)} minors")
        for m in closure:
            print(_graph_line(m))
    return EXIT_OK


def cmd_verify_minimal(args) -> int:
    g = load_graph_argument(args.graph)
    eng = _mk_engine(args)
    try:
        rep = minimality.verify_minor_minimal(
            g, args.kind, args.mode, restarts=args.restarts, seed=args.seed,
            cap=args.cap, engine=eng,
        )
    except minimality.InconclusiveRootError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.json:
        print(json.dumps(rep.to_json(failures_only=args.failures_only), indent=2))
    else:
        print(f"verdict: {rep.verdict}")
        print(f"value: {rep.kind} = {rep.value} ({rep.mode})")
        print(f"minors checked: {rep.minors_checked}")
        if rep.failures:
            print("failures:")
            for f in rep.failures:
                print(f"  {_graph_line(f.minor)}: {f.reason}")
        if rep.inconclusive_minors and not args.failures_only:
            print("inconclusive minors:")
            for m in rep.inconclusive_minors:
                print(f"  {_graph_line(m)}")
    if rep.verdict == minimality.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_radius(args) -> int:
    if args.what == "polygon":
        value = geometry.star_polygon_radius(args.a, args.b)
        if value is None:
            print("degenerate")
        else:
            print(fmt(value))
        return EXIT_OK
    if args.what == "cone":
        print(fmt(geometry.cone_radius(args.x)))
        return EXIT_OK
    if args.what == "simplex":
        print(fmt(geometry.simplex_radius(args.a)))
        return EXIT_OK
    if args.what == "iterate":
        res = geometry.iterate_cone_radius(args.x, args.a)
        if res.diverged_at is not None:
            print(f"diverged at step {res.diverged_at} "
                  f"(value {fmt(res.steps[res.diverged_at])})")
        else:
            print(fmt(res.value))
        return EXIT_OK
    raise EngineError(f"unknown radius computation {args.what!r}")


WHEEL_EXPECTED = {
    CROSSINGS: {"header": ("n=6", "n!=6"),
                "rows": {1: (2, 3), 2: (4, 3), 3: (5, 4)}},
    NON_CROSSING: {"header": ("3<=n<6", "n=6", "n>6"),
                   "rows": {1: (3, 2, 3), 2: (3, 4, 4), 3: (4, 5, 5)}},
}


def _wheel_cells(mode: str, k: int):
    if mode == CROSSINGS:
        return (wheel_dimension(6, k, False), wheel_dimension(7, k, False))
    return (wheel_dimension(4, k, True), wheel_dimension(6, k, True),
            wheel_dimension(7, k, True))


def cmd_tables(args) -> int:
    rows = []
    mismatches = 0
    if args.table == "wheel":
        spec = WHEEL_EXPECTED[args.mode]
        header = ("k",) + spec["header"]
        for k in (1, 2, 3):
            got = _wheel_cells(args.mode, k)
            expected = spec["rows"][k]
            status = "ok" if got == expected else f"MISMATCH expected {expected}"
            if got != expected:
                mismatches += 1
            label = f"k={k}" if k < 3 else "k>=3"
            rows.append((label,) + tuple(str(v) for v in got) + (status,))
        widths = [max(len(str(r[i])) for r in rows + [header + ("",)])
                  for i in range(len(header) + 1)]
        print("  ".join(h.ljust(w) for h, w in zip(header + ("check",), widths)))
        for r in rows:
            print("  ".join(str(c).ljust(w) for c, w in zip(r, widths)))
    elif args.table == "polygon":
        header = ("n", "m", "radius", "class", "check")
        print("  ".join(header))
        for n in range(3, 31):
            for m in range(1, (n - 1) // 2 + 1):
                if 2 * m >= n:
                    continue
                cls = geometry.classify_polygon_radius(n, m)
                radius = geometry.star_polygon_radius(n, m)
                if radius is None:
                    expected = geometry.DEGENERATE
                elif 6 * m == n:
                    expected = geometry.EQ_1
                elif 6 * m > n:
                    expected = geometry.LT_1
                else:
                    expected = geometry.GT_1
                ok = cls == expected
                if not ok:
                    mismatches += 1
                rows.append((n, m, "-" if radius is None else fmt(radius), cls,
                             "ok" if ok else "MISMATCH"))
        for r in rows:
            print("  ".join(str(c) for c in r))
    else:
        raise EngineError(f"unknown table {args.table!r}")

    if args.csv:
        import csv as _csv

        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = _csv.writer(fh)
            for r in rows:
                writer.writerow(r)
        print(f"wrote {args.csv}", file=sys.stderr)
    if args.figure:
        _render_table_figure(args.table, args.mode, rows, args.figure)
        print(f"wrote {args.figure}", file=sys.stderr)
    if mismatches:
        print(f"{mismatches} mismatching cells", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def _render_table_figure(table: str, mode: str, rows, path: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    if table == "polygon":
        colors = {geometry.LT_1: "tab:blue", geometry.EQ_1: "tab:green",
                  geometry.GT_1: "tab:red", geometry.DEGENERATE: "lightgray"}
        for n, m, _radius, cls, _ok in rows:
            ax.scatter(n, m, color=colors[cls], s=24)
        ax.set_xlabel("n")
        ax.set_ylabel("m")
        ax.set_title("polygon radius vs 1 (blue <1, green =1, red >1, gray degenerate)")
    else:
        cells = [[str(c) for c in r[:-1]] for r in rows]
        ax.axis("off")
        table_obj = ax.table(cellText=cells, loc="center")
        table_obj.scale(1, 1.6)
        ax.set_title(f"wheel dimensions ({mode})")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def cmd_petals(args) -> int:
    petals = enumerate_petals(args.n)
    if args.index is not None:
        if not 0 <= args.index < len(petals):
            print(f"error: index out of range 0..{len(petals) - 1}", file=sys.stderr)
            return EXIT_ERROR
        sys.stdout.write(format_graph_text(petals[args.index]))
        return EXIT_OK
    if args.json:
        print(json.dumps([
            {"index": i, "vertex_count": p.vertex_count,
             "edges": [list(e) for e in p.edges]}
            for i, p in enumerate(petals)
        ], indent=2))
    else:
        print(f"{len(petals)} petals with {args.n} edges")
        for i, p in enumerate(petals):
            print(f"{i}: {_graph_line(p)}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = load_graph_argument(args.graph)
    factors = join_decompose(g)
    if args.json:
        print(json.dumps([
            {"vertex_count": f.vertex_count, "edges": [list(e) for e in f.edges]}
            for f in factors
        ], indent=2))
    else:
        print(f"{len(factors)} join factor(s)")
        for f in factors:
            print(_graph_line(f))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_common(p, embed_opts=True):
    p.add_argument("--mode", choices=MODES, default=CROSSINGS,
                   help="whether edges may cross each other")
    if embed_opts:
        p.add_argument("--restarts", type=int, default=100)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=emb.FOUND_TOL)
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="unitdim",
        description="Dimension bounds and unit-distance embedding certificates "
                    "for finite simple graphs.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    for kind, name in ((DIM, "dim"), (SDIM, "sdim")):
        p = sub.add_parser(name, help=f"exact {name} or bounds with certificates")
        p.add_argument("graph", help="family literal (K:4, W:6:2, J(S:4,E:3)) or file")
        _add_common(p)
        p.add_argument("--explain", action="store_true",
                       help="print the certificate chain to stderr")
        p.add_argument("--no-embedder", action="store_true",
                       help="symbolic rules only")
        p.set_defaults(func=lambda a, k=kind: cmd_bounds(a, k))

    p = sub.add_parser("embed", help="search for a unit-distance embedding")
    p.add_argument("graph")
    p.add_argument("--dim", type=int, required=True, help="ambient dimension")
    p.add_argument("--on-sphere", action="store_true")
    p.add_argument("--sphere-radius", type=float, default=None)
    p.add_argument("--svg", default=None, help="write a 2D projection figure")
    _add_common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("minors", help="minor closure up to isomorphism")
    p.add_argument("graph")
    p.add_argument("--proper", action="store_true")
    p.add_argument("--cap", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("verify-minimal", help="exhaustive minor-minimality check")
    p.add_argument("graph")
    p.add_argument("--kind", choices=(DIM, SDIM), default=DIM)
    p.add_argument("--cap", type=int, default=10)
    p.add_argument("--failures-only", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_verify_minimal)

    p = sub.add_parser("radius", help="closed-form radii")
    rsub = p.add_subparsers(dest="what", required=True)
    q = rsub.add_parser("polygon", help="circumradius of the unit-side {n/m} polygon")
    q.add_argument("a", type=int, metavar="n")
    q.add_argument("b", type=int, metavar="m")
    q = rsub.add_parser("cone", help="sphere radius after adjoining one apex")
    q.add_argument("x", type=float, metavar="r")
    q = rsub.add_parser("simplex", help="circumradius of the complete graph's embedding")
    q.add_argument("a", type=int, metavar="n")
    q = rsub.add_parser("iterate", help="n-fold apex-radius iteration")
    q.add_argument("x", type=float, metavar="r")
    q.add_argument("a", type=int, metavar="n")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("tables", help="regenerate result tables and diff them")
    p.add_argument("table", choices=("wheel", "polygon"))
    p.add_argument("--mode", choices=MODES, default=CROSSINGS)
    p.add_argument("--csv", default=None, help="write the table as CSV")
    p.add_argument("--figure", default=None, help="render the table via matplotlib")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("petals", help="max-degree-2 graphs with a fixed edge count")
    p.add_argument("n", type=int)
    p.add_argument("--index", type=int, default=None,
                   help="print one petal in the graph file format")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_petals)

    p = sub.add_parser("decompose", help="join factors (complement components)")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, geometry.GeometryError, EngineError, RegistryMiss) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
