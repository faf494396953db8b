"""Command-line front end.

Exit codes: 0 ok, 1 a check failed, 2 bad usage, 3 a resource guard tripped.
CSV goes to tables and series, JSON to structured reports. Timing lives only
in the run manifest, so re-running a command reproduces its payload byte for
byte.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .bricks import BRICK_CSV_HEADER, FAMILIES, brick_csv_rows, enumerate_bricks
from .complex import GROWTH_HEADER, betti, euler_characteristic, f_vector, growth_series
from .graph import (
    DEFAULT_BUILD_CEILING,
    BabylonGraph,
    ResourceGuardError,
    build,
    components,
    degree_histogram,
    diameter,
    main_component,
)
from .io import (
    CacheFormatError,
    RunManifest,
    csv_payload,
    default_cache_path,
    emit,
    json_payload,
    read_edge_cache,
    sha256_file,
    write_edge_cache,
)
from .planarity import is_planar
from .search import DEFAULT_EPSILON, k4_hunt, perfect_hunt
from .verify import SUITES, run_suite

log = logging.getLogger("babylon")

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
# rough peak footprint of building B_n, in bytes per vertex
BYTES_PER_VERTEX = 400
MEMBERS_AUTO_LIMIT = 1000


class UsageError(Exception):
    pass


def _available_memory() -> int | None:
    try:
        return os.sysconf("SC_PAGE_SIZE") * os.sysconf("SC_PHYS_PAGES")
    except (ValueError, OSError, AttributeError):
        return None


def guarded_build(n: int, ceiling: int) -> BabylonGraph:
    mem = _available_memory()
    if mem is not None and n * BYTES_PER_VERTEX > mem:
        raise ResourceGuardError("memory-estimate", n * BYTES_PER_VERTEX, mem)
    return build(n, ceiling=ceiling)


def load_graph(args, manifest: RunManifest) -> BabylonGraph:
    """Graph from the edge cache when one exists for ``n``, else a fresh build."""
    path = Path(args.cache) if getattr(args, "cache", None) else default_cache_path(args.n)
    if path is not None and path.exists():
        g = read_edge_cache(path, ceiling=args.ceiling)
        if g.n != args.n:
            raise UsageError(f"cache {path} holds B_{g.n}, not B_{args.n}")
        manifest.input_digests[str(path)] = sha256_file(path)
        return g
    g = guarded_build(args.n, args.ceiling)
    if path is not None:
        write_edge_cache(g, path)
        manifest.input_digests[str(path)] = sha256_file(path)
    return g


# -- commands ----------------------------------------------------------------


def cmd_build(args, manifest: RunManifest) -> tuple[str, int]:
    g = load_graph(args, manifest)
    report = {
        "n": g.n,
        "edges": g.num_edges,
        "components": g.num_components,
        "digest": g.digest(),
    }
    return json_payload(report), EXIT_OK


def cmd_stats(args, manifest: RunManifest) -> tuple[str, int]:
    g = load_graph(args, manifest)
    fc = f_vector(g, args.scope)
    report: dict = {
        "n": g.n,
        "scope": args.scope,
        "f_vector": list(fc.f_vector),
        "chi": euler_characteristic(fc),
    }
    if args.betti:
        b = betti(g, args.scope, fc)
        report["betti"] = list(b.as_tuple())
        report["boundary_ranks"] = [b.rank_d1, b.rank_d2, b.rank_d3]
        report["torsion_warning"] = b.torsion_warning
    members = args.members if args.members is not None else g.n <= MEMBERS_AUTO_LIMIT
    main, main_vertices = main_component(g)
    summaries = [main] if args.scope == "main" else components(g)
    comps = []
    for c in summaries:
        entry = {
            "representative": c.representative,
            "size": c.size,
            "edges": c.edge_count,
            "has_triangle": c.has_triangle,
        }
        if members:
            entry["members"] = g.component_vertices(c.representative).tolist()
        comps.append(entry)
    report["num_components"] = g.num_components
    report["components"] = comps
    report["main_component"] = {"representative": main.representative, "size": main.size, "edges": main.edge_count}
    if args.diameter:
        report["diameter"] = diameter(g, main, workers=args.threads)
    if args.degrees:
        if args.scope == "main":
            hist: dict[int, int] = {}
            for d in g.degrees()[main_vertices].tolist():
                hist[d] = hist.get(d, 0) + 1
        else:
            hist = degree_histogram(g)
        report["degree_histogram"] = {str(k): v for k, v in sorted(hist.items())}
    return json_payload(report), EXIT_OK


def cmd_bricks(args, manifest: RunManifest) -> tuple[str, int]:
    if args.max < 1:
        raise UsageError(f"--max must be >= 1, got {args.max}")
    if args.max > args.ceiling:
        raise ResourceGuardError("build-ceiling", args.max, args.ceiling)
    bricks = enumerate_bricks(args.max, primitive_only=args.primitive)
    print(f"{len(bricks)} Euler bricks with sides <= {args.max}", file=sys.stderr)
    return csv_payload(BRICK_CSV_HEADER, brick_csv_rows(bricks)), EXIT_OK


def cmd_verify(args, manifest: RunManifest) -> tuple[str, int]:
    def progress(c):
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}  ({c.seconds:.2f} s)", file=sys.stderr)
        if not c.passed:
            print(f"      expected {c.expected}", file=sys.stderr)
            print(f"      actual   {c.actual}", file=sys.stderr)
        for w in c.warnings:
            print(f"      warning: {w}", file=sys.stderr)

    suite = run_suite(args.suite, quick=args.quick, workers=args.threads, progress=progress)
    failed = [c.name for c in suite.checks if not c.passed]
    print(f"{len(suite.checks) - len(failed)}/{len(suite.checks)} checks passed", file=sys.stderr)
    return json_payload(suite.to_dict(timing=False)), EXIT_OK if suite.passed else EXIT_CHECK


def cmd_growth(args, manifest: RunManifest) -> tuple[str, int]:
    if args.max < args.step:
        raise UsageError(f"--max ({args.max}) must be at least --step ({args.step})")
    mem = _available_memory()
    if mem is not None and args.max * BYTES_PER_VERTEX > mem:
        raise ResourceGuardError("memory-estimate", args.max * BYTES_PER_VERTEX, mem)
    rows = growth_series(args.max, args.step, ceiling=args.ceiling)
    return csv_payload(GROWTH_HEADER, rows), EXIT_OK


def cmd_search(args, manifest: RunManifest) -> tuple[str, int]:
    if args.kind == "k4":
        if args.n > args.ceiling:
            raise ResourceGuardError("build-ceiling", args.n, args.ceiling)
        rep = k4_hunt(
            args.n,
            args.wmax,
            args.epsilon,
            workers=args.threads or 1,
            accelerate=not args.linear,
            max_records=args.max_records,
        )
    else:
        rep = perfect_hunt(args.family, args.smax, args.tmax, args.epsilon, keep=args.keep)
    return json_payload(rep.to_dict(timing=False)), EXIT_OK


def cmd_planarity(args, manifest: RunManifest) -> tuple[str, int]:
    g = load_graph(args, manifest)
    return ("planar" if is_planar(g).planar else "non-planar") + "\n", EXIT_OK


# -- parser ------------------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _epsilon(text: str) -> float:
    v = float(text)
    if not 0 < v <= 0.5:
        raise argparse.ArgumentTypeError(f"epsilon must lie in (0, 0.5], got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="babylon", description="Experiments on the Babylonian graph B_n.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("--threads", type=_positive, default=None, help="cap on worker threads")
    ap.add_argument("--ceiling", type=_positive, default=DEFAULT_BUILD_CEILING, help="largest n that may be built")
    ap.add_argument("--manifest", default=None, help="manifest path (default: next to --out)")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build B_n and write its edge cache")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--cache", default=None, help="edge cache file (default: $BABYLON_CACHE_DIR/edges-<n>.txt)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("stats", help="f-vector, Betti numbers, components, diameter")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--scope", choices=("whole", "main"), default="whole")
    p.add_argument("--betti", action="store_true")
    p.add_argument("--diameter", action="store_true")
    p.add_argument("--degrees", action="store_true")
    p.add_argument(
        "--members",
        action=argparse.BooleanOptionalAction,
        default=None,
        help=f"list component vertices (default: only when n <= {MEMBERS_AUTO_LIMIT})",
    )
    p.add_argument("--cache", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bricks", help="Euler bricks with all sides <= max, as CSV")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--primitive", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bricks)

    p = sub.add_parser("verify", help="check published values")
    p.add_argument("--suite", choices=SUITES, default="published")
    p.add_argument("--quick", action="store_true", help="skip the n=10^4 diameter, smaller isolated-vertex range")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("growth", help="normalized edge and triangle counts as CSV")
    p.add_argument("--max", type=_positive, required=True)
    p.add_argument("--step", type=_positive, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("search", help="near-miss searches")
    ssub = p.add_subparsers(dest="kind", required=True)
    k4 = ssub.add_parser("k4", help="extend triangles of B_n to 4-cliques")
    k4.add_argument("--n", type=_positive, required=True)
    k4.add_argument("--wmax", type=_positive, required=True)
    k4.add_argument("--epsilon", type=_epsilon, default=DEFAULT_EPSILON)
    k4.add_argument("--linear", action="store_true", help="plain scan instead of the accelerated one")
    k4.add_argument("--max-records", type=_positive, default=1000)
    k4.add_argument("--out", default=None)
    k4.set_defaults(func=cmd_search)
    pf = ssub.add_parser("perfect", help="screen a brick family for a square space diagonal")
    pf.add_argument("--family", choices=FAMILIES, required=True)
    pf.add_argument("--smax", type=_positive, required=True)
    pf.add_argument("--tmax", type=_positive, required=True)
    pf.add_argument("--epsilon", type=_epsilon, default=DEFAULT_EPSILON)
    pf.add_argument("--keep", type=_positive, default=50)
    pf.add_argument("--out", default=None)
    pf.set_defaults(func=cmd_search)

    p = sub.add_parser("planarity", help="print planar or non-planar for B_n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--cache", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_planarity)
    return ap


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "verbose", "manifest", "out")}
    manifest = RunManifest(command=["babylon", *argv], parameters=params)
    try:
        payload, code = args.func(args, manifest)
    except ResourceGuardError as e:
        print(f"babylon: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, CacheFormatError, ValueError) as e:
        print(f"babylon: {e}", file=sys.stderr)
        return EXIT_USAGE
    emit(payload, args.out)
    manifest.finish(payload)
    target = args.manifest or (f"{args.out}.manifest.json" if args.out else None)
    if target:
        manifest.write(target)
    return code


if __name__ == "__main__":
    sys.exit(main())
