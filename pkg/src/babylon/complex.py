"""Flag complex of a graph up to dimension 3: cliques, f-vector, Betti numbers."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .graph import BabylonGraph, UnionFind, build, main_component
from .numthy import lambert_w

__all__ = [
    "FlagComplex",
    "BettiVector",
    "MERSENNE_31",
    "enumerate_triangles",
    "enumerate_k4",
    "f_vector",
    "euler_characteristic",
    "boundary_rank",
    "betti",
    "growth_series",
    "GROWTH_HEADER",
]

log = logging.getLogger(__name__)

MERSENNE_31 = 2_147_483_647
GROWTH_HEADER = ("n", "f1_ratio", "f2_ratio", "f1_main_ratio", "f2_main_ratio")

Scope = Literal["whole", "main"]


@dataclass(frozen=True)
class FlagComplex:
    f_vector: tuple[int, int, int, int]
    triangles: list[tuple[int, int, int]]
    tetrahedra: list[tuple[int, int, int, int]]
    restricted_to: str
    edges: list[tuple[int, int]]
    num_components: int

    @property
    def has_k4(self) -> bool:
        return self.f_vector[3] > 0


@dataclass(frozen=True)
class BettiVector:
    b0: int
    b1: int
    b2: int
    b3: int
    rank_d1: int
    rank_d2: int
    rank_d3: int
    field_modulus: int
    torsion_warning: bool = False

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.b0, self.b1, self.b2, self.b3)


def enumerate_triangles(g: BabylonGraph, vertices=None) -> list[tuple[int, int, int]]:
    """All triangles ``a < b < c``, each found once from its smallest edge.

    For an edge ``(a, b)`` the third vertex is drawn from the neighbours of
    both that exceed ``b``. ``vertices`` optionally restricts the search.
    """
    fwd = g.forward_sets()
    allowed = None if vertices is None else set(int(v) for v in vertices)
    out = []
    for a in range(1, g.n + 1):
        na = fwd[a]
        if len(na) < 2 or (allowed is not None and a not in allowed):
            continue
        for b in na:
            common = na & fwd[b]
            for c in common:
                out.append((a, b, c))
    out.sort()
    return out


def enumerate_k4(g: BabylonGraph, triangles=None) -> list[tuple[int, int, int, int]]:
    """All 4-cliques, extending each triangle by common neighbours above its top vertex."""
    fwd = g.forward_sets()
    if triangles is None:
        triangles = enumerate_triangles(g)
    out = []
    for a, b, c in triangles:
        for d in fwd[a] & fwd[b] & fwd[c]:
            out.append((a, b, c, d))
    out.sort()
    return out


def _restrict(g: BabylonGraph, scope: Scope) -> tuple[str, np.ndarray | None]:
    if scope == "whole":
        return "whole", None
    if scope == "main":
        summary, verts = main_component(g)
        return f"main:{summary.representative}", np.asarray(verts, dtype=np.int64)
    raise ValueError(f"scope must be 'whole' or 'main', got {scope!r}")


def f_vector(g: BabylonGraph, scope: Scope = "whole") -> FlagComplex:
    label, verts = _restrict(g, scope)
    if verts is None:
        edges = g.edges()
        tri = enumerate_triangles(g)
        f0 = g.n
        ncomp = g.num_components
    else:
        rep = int(g.component_id[verts[0]])
        mask = g.component_id[g.edge_a] == rep
        edges = list(zip(g.edge_a[mask].tolist(), g.edge_b[mask].tolist()))
        tri = enumerate_triangles(g, verts)
        f0 = len(verts)
        ncomp = 1
    tet = enumerate_k4(g, tri)
    return FlagComplex((f0, len(edges), len(tri), len(tet)), tri, tet, label, edges, ncomp)


def euler_characteristic(fc: FlagComplex) -> int:
    f0, f1, f2, f3 = fc.f_vector
    return f0 - f1 + f2 - f3


def boundary_rank(columns: list[dict[int, int]], modulus: int) -> int:
    """Rank over GF(modulus) of a sparse matrix given as column dicts ``row -> entry``.

    Plain column reduction: each column is reduced against the pivot column
    owning its largest row index until it vanishes or claims a new pivot.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        col = {r: v % modulus for r, v in col.items() if v % modulus}
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                rank += 1
                break
            factor = col[low] * pow(piv[low], -1, modulus) % modulus
            for r, v in piv.items():
                nv = (col.get(r, 0) - factor * v) % modulus
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
    return rank


def _boundary_columns(simplices, faces_index) -> list[dict[int, int]]:
    cols = []
    for s in simplices:
        col = {}
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            col[faces_index[face]] = -1 if i % 2 else 1
        cols.append(col)
    return cols


def betti(g: BabylonGraph, scope: Scope = "whole", fc: FlagComplex | None = None) -> BettiVector:
    """Betti numbers of the flag complex from boundary ranks.

    ``rank d1`` comes from the component count; ``d2`` and ``d3`` are ranked
    over GF(2^31 - 1) and again over GF(2). A disagreement means the integer
    homology may have torsion and is flagged, not resolved.
    """
    if fc is None:
        fc = f_vector(g, scope)
    f0, f1, f2, f3 = fc.f_vector
    rank_d1 = f0 - fc.num_components
    edge_index = {e: i for i, e in enumerate(fc.edges)}
    tri_index = {t: i for i, t in enumerate(fc.triangles)}
    d2 = _boundary_columns(fc.triangles, edge_index)
    d3 = _boundary_columns(fc.tetrahedra, tri_index)
    rank_d2 = boundary_rank(d2, MERSENNE_31)
    rank_d3 = boundary_rank(d3, MERSENNE_31)
    torsion = (boundary_rank(d2, 2), boundary_rank(d3, 2)) != (rank_d2, rank_d3)
    if torsion:
        log.warning("boundary ranks differ between GF(p) and GF(2): possible torsion")
    return BettiVector(
        b0=f0 - rank_d1,
        b1=f1 - rank_d1 - rank_d2,
        b2=f2 - rank_d2 - rank_d3,
        b3=f3 - rank_d3,
        rank_d1=rank_d1,
        rank_d2=rank_d2,
        rank_d3=rank_d3,
        field_modulus=MERSENNE_31,
        torsion_warning=torsion,
    )


def growth_series(n_max: int, step: int, *, ceiling: int | None = None) -> list[tuple[int, float, float, float, float]]:
    """Rows ``(n, f1/(nW(n)), f2/(nW(n)), f1'/(nW(n)), f2'/(nW(n)))`` for ``n = step, 2 step, ...``.

    Primed counts belong to the main component of ``B_n``. One graph
    ``B_{n_max}`` is built and its edges are replayed in order of their
    larger endpoint through a union-find that tracks per-component edge
    and triangle counts, so each checkpoint costs only a scan over roots.
    """
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    kwargs = {} if ceiling is None else {"ceiling": ceiling}
    g = build(n_max, **kwargs)
    tris = enumerate_triangles(g)
    ea, eb = g.edge_a, g.edge_b
    order = np.argsort(eb, kind="stable")
    ea, eb = ea[order].tolist(), eb[order].tolist()
    tri_top = sorted(tris, key=lambda t: t[2])

    uf = UnionFind(n_max + 1)
    size = [1] * (n_max + 1)
    ecount = [0] * (n_max + 1)
    tcount = [0] * (n_max + 1)
    rows = []
    ei = ti = 0
    for n in range(step, n_max + 1, step):
        while ei < len(eb) and eb[ei] <= n:
            ra, rb = uf.find(ea[ei]), uf.find(eb[ei])
            if ra != rb:
                uf.union(ra, rb)
                root = min(ra, rb)
                other = max(ra, rb)
                size[root] += size[other]
                ecount[root] += ecount[other]
                tcount[root] += tcount[other]
            ecount[uf.find(ea[ei])] += 1
            ei += 1
        while ti < len(tri_top) and tri_top[ti][2] <= n:
            tcount[uf.find(tri_top[ti][0])] += 1
            ti += 1
        main = min((r for r in range(1, n + 1) if uf.parent[r] == r), key=lambda r: (-size[r], r))
        norm = n * lambert_w(n)
        rows.append((n, ei / norm, ti / norm, ecount[main] / norm, tcount[main] / norm))
    return rows
