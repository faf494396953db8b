"""Nearest-integer screening scans for K4 extensions and perfect bricks.

``F(w) = sum_i d(sqrt(anchor_i^2 + w^2))`` where ``d`` is the distance to the
nearest integer. Over a window of ``w`` each term is, to second order, an
irrational rotation ``theta + k * alpha (mod 1)``; the accelerated scan
enumerates the ``k`` where that rotation comes close to an integer, using a
continued-fraction convergent of ``alpha`` to split the window into slowly
drifting residue classes. Floats only screen: every reported solution is
re-verified in integer arithmetic.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .bricks import FAMILIES, check_record_consistency, family_point, space_diagonal_factor
from .numthy import is_square, isqrt, sqrt_dist

__all__ = [
    "continued_fraction",
    "convergents",
    "ScanObjective",
    "SearchReport",
    "scan_extend",
    "k4_hunt",
    "perfect_hunt",
    "DEFAULT_EPSILON",
]

DEFAULT_EPSILON = 1e-3
# float sqrt of an int64 is only trusted below this
_VECTOR_LIMIT = 2**52
_SLOP = 1e-9


def continued_fraction(x: float, max_terms: int = 32) -> list[int]:
    terms = []
    for _ in range(max_terms):
        a = math.floor(x)
        terms.append(a)
        frac = x - a
        if frac < 1e-15:
            break
        x = 1.0 / frac
    return terms


def convergents(x: float, max_q: int | None = None, max_terms: int = 40) -> list[tuple[int, int]]:
    """Convergents ``p/q`` of ``x`` with ``q <= max_q``, in increasing ``q``."""
    out = []
    p0, q0, p1, q1 = 0, 1, 1, 0
    for a in continued_fraction(x, max_terms):
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        if max_q is not None and q1 > max_q:
            break
        out.append((p1, q1))
    return out


@dataclass(frozen=True)
class ScanObjective:
    anchors: tuple[int, ...]

    def __post_init__(self):
        if not self.anchors or any(a < 1 for a in self.anchors):
            raise ValueError(f"anchors must be positive integers, got {self.anchors}")

    def value(self, w: int) -> float:
        return sum(sqrt_dist(a * a + w * w) for a in self.anchors)

    def is_exact(self, w: int) -> bool:
        return all(is_square(a * a + w * w) for a in self.anchors)

    def values(self, ws: np.ndarray) -> np.ndarray:
        """Vectorized :meth:`value`; falls back to exact Python ints for huge inputs."""
        ws = np.asarray(ws, dtype=np.int64)
        if len(ws) == 0:
            return np.zeros(0)
        top = max(self.anchors) ** 2 + int(ws.max()) ** 2
        if top >= _VECTOR_LIMIT:
            return np.array([self.value(int(w)) for w in ws])
        total = np.zeros(len(ws))
        w2 = ws * ws
        for a in self.anchors:
            n = w2 + a * a
            root = np.sqrt(n.astype(np.float64))
            r = np.floor(root).astype(np.int64)
            r -= r * r > n
            r += (r + 1) * (r + 1) <= n
            rem = n - r * r
            frac = rem / (root + r)
            total += np.where(rem == 0, 0.0, np.minimum(frac, 1.0 - frac))
        return total


@dataclass
class SearchReport:
    family: str
    range: tuple
    epsilon: float
    exact_hits: list = field(default_factory=list)
    near_misses: list = field(default_factory=list)
    steps: dict = field(default_factory=dict)
    seconds: float = 0.0
    anchors: tuple | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "family": self.family,
            "range": list(self.range),
            "epsilon": self.epsilon,
            "exact_hits": self.exact_hits,
            "near_misses": [dict(m, F=float(f"{m['F']:.12g}")) for m in self.near_misses],
            "steps": self.steps,
        }
        if self.anchors is not None:
            out["anchors"] = list(self.anchors)
        out.update(self.extra)
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)


def _rotation_hits(theta: float, beta: float, length: int, delta: float) -> list[int]:
    """``k`` in ``[0, length)`` with ``||theta + k*beta|| < delta`` (a superset is fine).

    With ``p/q`` a convergent of ``beta``, the residue class ``k = r + q*m``
    gives ``theta + r*beta + m*gamma (mod 1)``, ``gamma = q*beta - p``, a slow
    linear drift whose near-integer stretches are intervals in ``m``.
    The convergent minimizing ``q + length*|gamma|`` sets the cost.
    """
    if delta >= 0.5:
        return list(range(length))
    best_q, best_p, best_cost = 1, round(beta), math.inf
    for p, q in convergents(beta, max_q=length):
        cost = 2 * q + length * abs(q * beta - p)
        if cost < best_cost:
            best_q, best_p, best_cost = q, p, cost
    q, p = best_q, best_p
    gamma = q * beta - p
    hits = []
    for r in range(min(q, length)):
        y0 = theta + r * beta
        m_max = (length - 1 - r) // q
        y1 = y0 + m_max * gamma
        lo_y, hi_y = min(y0, y1), max(y0, y1)
        for j in range(math.floor(lo_y - delta), math.ceil(hi_y + delta) + 1):
            if gamma == 0.0:
                if abs(y0 - j) < delta:
                    hits.extend(range(r, length, q))
                continue
            m1 = (j - delta - y0) / gamma
            m2 = (j + delta - y0) / gamma
            m_lo = max(0, math.ceil(min(m1, m2)) - 1)
            m_hi = min(m_max, math.floor(max(m1, m2)) + 1)
            for m in range(m_lo, m_hi + 1):
                k = r + q * m
                y = theta + k * beta
                if abs(y - round(y)) < delta:
                    hits.append(k)
    return sorted(set(hits))


def _plan_window(anchors, w: int, epsilon: float, max_len: int, min_window: int):
    """Pick the pivot anchor and window length with the lowest expected work per ``w``.

    For a pivot with slope offset ``beta`` and tolerance ``delta`` the rotation
    visits about ``2 delta (L + 1/|beta|)`` near-integer points in a window of
    ``L``, plus ``O(sqrt L)`` bookkeeping. Returns ``(rate, anchor, L, curvature)``.
    """
    wf = float(w)
    best = (math.inf, anchors[0], min(min_window, max_len), 0.0)
    lengths = []
    length = min_window
    while length < max_len:
        lengths.append(length)
        length *= 4
    lengths.append(max_len)
    for a in anchors:
        a2 = float(a * a)
        curv = a2 / (a2 + wf * wf) ** 1.5
        beta = a2 / (wf * wf + a2 + wf * math.sqrt(wf * wf + a2))
        for length in lengths:
            delta = epsilon + 0.5 * curv * length * length + 2 * _SLOP
            if delta >= 0.5:
                break
            visits = min(length, 2.0 * delta * (length + 1.0 / beta))
            rate = (visits + 3.0 * math.sqrt(length)) / length
            if rate < best[0]:
                best = (rate, a, length, curv)
    return best


class _Collector:
    def __init__(self, obj: ScanObjective, epsilon: float, max_records: int):
        self.obj = obj
        self.epsilon = epsilon
        self.max_records = max_records
        self.near: list[tuple[float, int]] = []
        self.hits: list[int] = []
        self.evaluations = 0

    def feed(self, ws: np.ndarray) -> None:
        if len(ws) == 0:
            return
        vals = self.obj.values(ws)
        self.evaluations += len(ws)
        for i in np.nonzero(vals < self.epsilon)[0].tolist():
            w = int(ws[i])
            self.near.append((float(vals[i]), w))
            # screening passed: decide exactly
            if self.obj.is_exact(w):
                self.hits.append(w)

    def records(self) -> list[dict]:
        self.near.sort()
        return [{"w": w, "F": f} for f, w in self.near[: self.max_records]]


def scan_extend(
    anchors: Sequence[int],
    w_min: int,
    w_max: int,
    epsilon: float = DEFAULT_EPSILON,
    *,
    accelerate: bool = True,
    min_window: int = 64,
    max_jump: int = 10**6,
    max_records: int = 10_000,
) -> SearchReport:
    """Find ``w`` in ``[w_min, w_max]`` with every ``anchor^2 + w^2`` a perfect square.

    Screens with ``F(w) < epsilon`` and verifies survivors exactly. The
    accelerated mode evaluates ``F`` only where the linearized rotation of
    one pivot anchor can come within ``epsilon`` of an integer, widened by
    the curvature neglected over the window. Pivot and window length are
    re-planned after every window; where no pivot prunes at least half the
    window, a plain vectorized chunk is evaluated instead.
    """
    anchors = tuple(int(a) for a in anchors)
    obj = ScanObjective(anchors)
    if w_min < 1 or w_min > w_max:
        raise ValueError(f"need 1 <= w_min <= w_max, got [{w_min}, {w_max}]")
    if not 0 < epsilon <= 0.5:
        raise ValueError(f"epsilon must lie in (0, 0.5], got {epsilon}")
    t0 = time.perf_counter()
    col = _Collector(obj, epsilon, max_records)
    windows = linear_chunks = 0
    w = w_min
    while w <= w_max:
        remaining = w_max - w + 1
        if not accelerate:
            chunk = min(remaining, 1 << 16)
            col.feed(np.arange(w, w + chunk, dtype=np.int64))
            linear_chunks += 1
            w += chunk
            continue
        rate, a, length, curv = _plan_window(anchors, w, epsilon, min(max_jump, remaining), min_window)
        if rate > 0.5:
            chunk = min(max(min_window, length), remaining)
            col.feed(np.arange(w, w + chunk, dtype=np.int64))
            linear_chunks += 1
            w += chunk
            continue
        n0 = a * a + w * w
        r = isqrt(n0)
        root = math.sqrt(n0)
        theta = (n0 - r * r) / (root + r)
        g0 = r + theta
        # slope of sqrt(a^2 + w^2) is 1 + beta with beta in (-1, 0]
        beta = -(a * a) / (g0 * (g0 + w))
        delta = epsilon + 0.5 * curv * length * length + 2 * _SLOP
        ks = _rotation_hits(theta, beta, length, delta)
        col.feed(np.asarray(ks, dtype=np.int64) + w)
        windows += 1
        w += length
    report = SearchReport(
        family="extend",
        range=(w_min, w_max),
        epsilon=epsilon,
        exact_hits=sorted(col.hits),
        near_misses=col.records(),
        steps={
            "evaluations": col.evaluations,
            "windows": windows,
            "linear_chunks": linear_chunks,
            "accelerated": accelerate,
        },
        anchors=anchors,
    )
    report.seconds = time.perf_counter() - t0
    return report


def k4_hunt(
    n: int,
    w_max: int,
    epsilon: float = DEFAULT_EPSILON,
    *,
    workers: int = 1,
    accelerate: bool = True,
    max_records: int = 1000,
) -> SearchReport:
    """Try to extend every triangle of ``B_n`` to a 4-clique with a fourth side ``w <= w_max``."""
    from .complex import enumerate_triangles
    from .graph import build

    if n < 240:
        raise ValueError(f"B_n has no triangle below n = 240, got n = {n}")
    t0 = time.perf_counter()
    triangles = enumerate_triangles(build(n))

    def run(tri):
        return scan_extend(tri, 1, w_max, epsilon, accelerate=accelerate, max_records=max_records)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run, triangles))
    else:
        reports = [run(t) for t in triangles]

    hits, near = [], []
    evaluations = 0
    for tri, rep in zip(triangles, reports):
        evaluations += rep.steps["evaluations"]
        for w in rep.exact_hits:
            quad = tuple(sorted((*tri, w)))
            diagonals = [isqrt(p * p + q * q) for i, p in enumerate(quad) for q in quad[i + 1:]]
            hits.append({"vertices": list(quad), "diagonals": diagonals})
        near.extend(dict(m, anchors=list(tri)) for m in rep.near_misses)
    near.sort(key=lambda m: (m["F"], m["anchors"], m["w"]))
    report = SearchReport(
        family="k4",
        range=(1, w_max),
        epsilon=epsilon,
        exact_hits=hits,
        near_misses=near[:max_records],
        steps={"evaluations": evaluations, "scans": len(triangles)},
        extra={"n": n, "triangle_count": len(triangles)},
    )
    report.seconds = time.perf_counter() - t0
    return report


def perfect_hunt(
    family: str,
    s_max: int,
    t_max: int,
    epsilon: float = DEFAULT_EPSILON,
    *,
    keep: int = 50,
) -> SearchReport:
    """Screen a brick family's grid for a square space diagonal.

    For each valid ``(s, t)`` the family's space-diagonal factor ``f`` (a
    square iff the brick is perfect) is scored by ``d(sqrt f)``. The ``keep``
    lowest scores are reported; any point scoring below ``epsilon`` is
    checked exactly on the full ``x^2 + y^2 + z^2``.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if s_max < 1 or t_max < 1:
        raise ValueError("grid bounds must be >= 1")
    t0 = time.perf_counter()
    scored = []
    hits = []
    points = 0
    for s in range(1, s_max + 1):
        for t in range(1, t_max + 1):
            if family != "saunderson" and t >= s:
                break
            if family == "saunderson" and not is_square(s * s + t * t):
                continue
            value = space_diagonal_factor(family, s, t)
            f = sqrt_dist(value)
            points += 1
            scored.append((f, s, t, value))
            if f < epsilon:
                pt = family_point(family, s, t)
                if pt is not None and pt.brick.perfect:
                    check_record_consistency(pt.brick)
                    hits.append({"parameters": [s, t], "sides": list(pt.brick.sides)})
    scored.sort()
    report = SearchReport(
        family=family,
        range=(s_max, t_max),
        epsilon=epsilon,
        exact_hits=hits,
        near_misses=[{"w": [s, t], "F": f, "value": v} for f, s, t, v in scored[:keep]],
        steps={"points": points},
    )
    report.seconds = time.perf_counter() - t0
    return report
