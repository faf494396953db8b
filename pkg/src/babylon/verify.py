"""Battery of checks against published values, with known table anomalies as warnings."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import reference_data as ref
from .bricks import (
    Brick,
    divisibility_theorem_check,
    enumerate_bricks,
    pocklington_scan,
    six_square_check,
    spohn_scan,
)
from .complex import betti, euler_characteristic, f_vector, growth_series
from .graph import build, components, diameter, isolated_vertices, main_component
from .planarity import is_planar
from .search import k4_hunt
from .triples import edges_up_to, is_edge, neighbors_unbounded

__all__ = ["Check", "CheckSuite", "run_suite", "SUITES"]

SUITES = ("published",)


@dataclass
class Check:
    name: str
    passed: bool
    expected: object
    actual: object
    warnings: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "name": self.name,
            "passed": self.passed,
            "expected": _plain(self.expected),
            "actual": _plain(self.actual),
            "warnings": list(self.warnings),
        }
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out


@dataclass
class CheckSuite:
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def warnings(self) -> list[str]:
        return [f"{c.name}: {w}" for c in self.checks for w in c.warnings]

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "passed": self.passed,
            "checks": [c.to_dict(timing) for c in self.checks],
            "failures": [c.name for c in self.checks if not c.passed],
            "warnings": self.warnings,
        }


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(v) for v in x]
    if isinstance(x, list):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x


def _timed(fn: Callable[[], Check]) -> Check:
    t0 = time.perf_counter()
    check = fn()
    check.seconds = time.perf_counter() - t0
    return check


# -- individual checks -------------------------------------------------------


def check_f_vectors() -> Check:
    g = build(1000)
    whole = f_vector(g, "whole").f_vector[:3]
    main = f_vector(g, "main").f_vector[:3]
    expected = {"whole": (1000, 1034, 10), "main": (480, 952, 10)}
    actual = {"whole": whole, "main": main}
    return Check("f-vector B_1000", actual == expected, expected, actual)


def check_betti() -> Check:
    g = build(1000)
    actual = {}
    identity = True
    for scope in ("main", "whole"):
        fc = f_vector(g, scope)
        b = betti(g, scope, fc)
        chi = euler_characteristic(fc)
        identity &= chi == b.b0 - b.b1 + b.b2 - b.b3
        actual[scope] = {"b": (b.b0, b.b1), "chi": chi}
    expected = {"main": {"b": (1, 463), "chi": -462}, "whole": {"b": (439, 463), "chi": -24}}
    note = "published caption labels these values n=10000; they are the values of B_1000"
    return Check("Betti numbers and Euler characteristic B_1000", identity and actual == expected, expected, actual, [note])


def check_diameter(n: int, workers: int | None = None) -> Check:
    g = build(n)
    summary, _ = main_component(g)
    d = diameter(g, summary, workers=workers)
    expected = ref.PUBLISHED_DIAMETERS[n]
    return Check(f"main-component diameter B_{n}", d == expected, expected, d)


def planarity_flip(lo: int = 2, hi: int = 200) -> list[int]:
    """Every ``n`` in ``[lo, hi]`` at which planarity changes from ``B_{n-1}`` to ``B_n``."""
    flips = []
    prev = None
    for n in range(lo, hi + 1):
        planar = is_planar(build(n)).planar
        if prev is not None and planar != prev:
            flips.append(n)
        prev = planar
    return flips


def check_planarity() -> Check:
    flips = planarity_flip(2, 200)
    expected = [ref.PLANARITY_THRESHOLD + 1]
    return Check("planarity flips only at 95 -> 96", flips == expected, expected, flips)


def brick_table_diff(published, computed: list[Brick]) -> dict[str, list]:
    """Rows printed but not found, duplicated rows, and rows found but not printed."""
    have = {b.sides for b in computed}
    printed = [tuple(sorted(r)) for r in published]
    seen: set = set()
    dupes = []
    for r in printed:
        if r in seen:
            dupes.append(r)
        seen.add(r)
    return {
        "not_bricks": sorted(r for r in seen if r not in have),
        "duplicates": dupes,
        "missing": sorted(s for s in have if s not in seen),
    }


def check_brick_tables() -> Check:
    b8000 = enumerate_bricks(8000)
    counts = {m: sum(1 for b in b8000 if b.z <= m) for m in ref.PUBLISHED_BRICK_COUNTS}
    rows300 = sorted(b.sides for b in b8000 if b.z <= 300)
    rows1000 = sorted(b.sides for b in b8000 if b.z <= 1000)
    exact_ok = (
        rows300 == sorted(ref.PUBLISHED_BRICKS_300)
        and rows1000 == sorted(ref.PUBLISHED_BRICKS_1000)
        and counts[300] == 2
        and counts[1000] == 10
    )
    warnings = []
    for m, c in counts.items():
        if c != ref.PUBLISHED_BRICK_COUNTS[m]:
            warnings.append(f"count for sides <= {m}: published {ref.PUBLISHED_BRICK_COUNTS[m]}, computed {c}")
    published_2000 = ref.PUBLISHED_BRICKS_1000 + ref.PUBLISHED_BRICKS_2000_EXTRA
    diff2000 = brick_table_diff(published_2000, [b for b in b8000 if b.z <= 2000])
    diff8000 = brick_table_diff(ref.PUBLISHED_BRICKS_8000, b8000)
    for label, diff in (("2000", diff2000), ("8000", diff8000)):
        for kind, rows in diff.items():
            for r in rows:
                warnings.append(f"table <= {label}: {kind.replace('_', ' ')} {r}")
    # every count disagreement must be explained row by row
    explained = len(published_2000) - len(diff2000["duplicates"]) - len(diff2000["not_bricks"]) + len(
        diff2000["missing"]
    ) == counts[2000] and len(ref.PUBLISHED_BRICKS_8000) - len(diff8000["duplicates"]) - len(
        diff8000["not_bricks"]
    ) + len(diff8000["missing"]) == counts[8000]
    expected = {"300": sorted(ref.PUBLISHED_BRICKS_300), "1000_count": 10, "discrepancies_itemized": True}
    actual = {"300": rows300, "1000_count": counts[1000], "discrepancies_itemized": explained, "counts": counts}
    return Check("Euler-brick tables", exact_ok and explained, expected, actual, warnings)


def unbounded_isolated(limit: int) -> list[int]:
    """Vertices ``<= limit`` with no neighbour at all in the infinite graph."""
    g = build(limit)
    return [v for v in isolated_vertices(g) if not neighbors_unbounded(v)]


def _odd_primes(limit: int) -> list[int]:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return [int(p) for p in np.nonzero(sieve)[0] if p > 2]


def check_vertex_structure(isolated_limit: int = 10**6) -> Check:
    warnings = []
    iso = unbounded_isolated(isolated_limit)
    truncated = isolated_vertices(build(100))
    if truncated != [1, 2]:
        warnings.append(
            f"in the finite B_100 the isolated vertices are {truncated}; "
            "only 1 and 2 stay isolated once neighbours beyond n are allowed"
        )
    bad_primes = [p for p in _odd_primes(10**4) if len(neighbors_unbounded(p)) != 1]
    pair_ok = True
    for n in (4, 5, 10, 100, 1000, 10**4):
        comps = {c.representative: c.size for c in components(build(n))}
        pair_ok &= comps.get(3) == 2 and sorted(build(n).neighbors(3).tolist()) == [4]
    paths = {}
    for path in ((5, 12, 16, 30), (30, 40, 96, 180)):
        paths[path] = all(is_edge(a, b) for a, b in zip(path, path[1:]))
    actual = {
        "unbounded_isolated": iso,
        "odd_primes_not_leaves": bad_primes,
        "3_4_component": pair_ok,
        "scaling_paths": {"->".join(map(str, p)): ok for p, ok in paths.items()},
    }
    expected = {
        "unbounded_isolated": [1, 2],
        "odd_primes_not_leaves": [],
        "3_4_component": True,
        "scaling_paths": {"->".join(map(str, p)): True for p in paths},
    }
    return Check(f"vertex structure (isolated vertices up to {isolated_limit})", actual == expected, expected, actual, warnings)


def check_impossibility() -> Check:
    pock = pocklington_scan(500, 500)
    spohn = [p.parameters for p in spohn_scan(200, 200)]
    failures = []
    for b in enumerate_bricks(8000, primitive_only=True):
        res = divisibility_theorem_check(b)
        if not all(res.values()):
            failures.append(b.sides)
    actual = {"pocklington": pock, "spohn": spohn, "divisibility_failures": failures}
    expected = {"pocklington": [], "spohn": [], "divisibility_failures": []}
    return Check("impossibility oracles", actual == expected, expected, actual)


def check_diophantine() -> Check:
    six = six_square_check(*ref.OZANAM_TRIPLE)
    halcke = Brick.from_sides(*ref.HALCKE_BRICK)
    actual = {"ozanam_all_square": all(six.values()), "halcke_perfect": halcke.perfect}
    expected = {"ozanam_all_square": True, "halcke_perfect": False}
    return Check("Diophantine spot checks", actual == expected, expected, actual)


def brute_force_edges(n: int) -> list[tuple[int, int]]:
    """All pairs ``a < b <= n`` with ``a^2 + b^2`` square, by exhaustive scan."""
    out = []
    v = np.arange(1, n + 1, dtype=np.int64)
    for a in range(1, n):
        b = v[a:]
        s = a * a + b * b
        r = np.sqrt(s.astype(np.float64)).round().astype(np.int64)
        out.extend((a, int(x)) for x in b[r * r == s])
    return out


def check_edges(n: int = 2000) -> Check:
    ok = edges_up_to(n) == brute_force_edges(n)
    return Check(f"edges of B_{n} equal exhaustive scan", ok, True, ok)


def check_growth() -> Check:
    rows = growth_series(25000, 1000)
    finite = all(all(math.isfinite(x) and x > 0 for x in r[1:]) for r in rows if r[0] >= 1000)
    last = [r[1] for r in rows[-5:]]
    spread = (max(last) - min(last)) / min(last)
    actual = {"rows": len(rows), "finite_positive": finite, "spread_below_10pct": spread < 0.1}
    expected = {"rows": 25, "finite_positive": True, "spread_below_10pct": True}
    return Check("growth series n=1000..25000", actual == expected, expected, dict(actual, spread=spread))


def check_k4(workers: int = 1) -> Check:
    rep = k4_hunt(1000, 100_000, workers=workers)
    actual = {"exact_hits": rep.exact_hits, "triangle_count": rep.extra["triangle_count"]}
    expected = {"exact_hits": [], "triangle_count": 10}
    return Check("K4 search B_1000, w <= 100000", actual == expected, expected, actual)


def run_suite(
    suite: str = "published",
    *,
    quick: bool = False,
    workers: int | None = None,
    progress: Callable[[Check], None] | None = None,
) -> CheckSuite:
    """Run every check; ``quick`` drops the slowest ones to smaller sizes."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    plan: list[Callable[[], Check]] = [
        check_f_vectors,
        check_betti,
        lambda: check_diameter(5000, workers),
        check_planarity,
        check_brick_tables,
        lambda: check_vertex_structure(10**4 if quick else 10**6),
        check_impossibility,
        check_diophantine,
        check_edges,
        check_growth,
        lambda: check_k4(workers or 1),
    ]
    if not quick:
        plan.insert(3, lambda: check_diameter(10000, workers))
    checks = []
    for fn in plan:
        c = _timed(fn)
        checks.append(c)
        if progress:
            progress(c)
    return CheckSuite(checks)

