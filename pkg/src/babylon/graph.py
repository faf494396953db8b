"""The Babylonian graph ``B_n`` as an immutable CSR adjacency structure."""

from __future__ import annotations

import hashlib
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .triples import edge_arrays, neighbors_unbounded

__all__ = [
    "ResourceGuardError",
    "UnionFind",
    "BabylonGraph",
    "ComponentSummary",
    "DEFAULT_BUILD_CEILING",
    "DEFAULT_DIAMETER_CEILING",
    "build",
    "components",
    "main_component",
    "diameter",
    "isolated_vertices",
    "leaves",
    "degree_histogram",
    "find_scaling_path",
]

DEFAULT_BUILD_CEILING = 10**6
DEFAULT_DIAMETER_CEILING = 10**5
# vertex ids are stored as int32
_MAX_VERTEX = 2**31 - 1


class ResourceGuardError(RuntimeError):
    """A configured size ceiling would be exceeded."""

    def __init__(self, guard: str, value: int, limit: int):
        super().__init__(f"resource guard '{guard}' tripped: {value} exceeds limit {limit}")
        self.guard = guard
        self.value = value
        self.limit = limit


class UnionFind:
    """Disjoint sets over ``0..size-1`` whose root is always the smallest member."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        self.count -= 1
        return True

    def labels(self) -> list[int]:
        parent = self.parent
        # roots are minimal, so parent[x] < x for non-roots and one
        # ascending pass suffices to flatten every chain
        for x in range(len(parent)):
            parent[x] = parent[parent[x]]
        return parent


@dataclass(frozen=True, eq=False)
class BabylonGraph:
    """Adjacency of a graph on vertices ``1..n``.

    ``indptr``/``indices`` are CSR arrays indexed by vertex id (slot 0 is an
    unused dummy). ``component_id[v]`` is the smallest vertex in the
    component of ``v``. ``edge_a``/``edge_b`` hold the sorted edge list.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    edge_a: np.ndarray
    edge_b: np.ndarray
    component_id: np.ndarray
    component_sizes: dict[int, int]
    forest_edges: int
    babylonian: bool = True
    _nbr_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], *, babylonian: bool = False) -> "BabylonGraph":
        """Graph on ``1..n`` with the given undirected edges (used for fixtures too)."""
        pairs = {(min(a, b), max(a, b)) for a, b in edges}
        for a, b in pairs:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if a < 1 or b > n:
                raise ValueError(f"edge ({a}, {b}) outside vertex range 1..{n}")
        ordered = sorted(pairs)
        ea = np.fromiter((p[0] for p in ordered), dtype=np.int64, count=len(ordered))
        eb = np.fromiter((p[1] for p in ordered), dtype=np.int64, count=len(ordered))
        return cls._assemble(n, ea, eb, babylonian=babylonian)

    @classmethod
    def _assemble(cls, n: int, ea: np.ndarray, eb: np.ndarray, *, babylonian: bool) -> "BabylonGraph":
        if n > _MAX_VERTEX:
            raise ResourceGuardError("vertex-id-width", n, _MAX_VERTEX)
        src = np.concatenate([ea, eb])
        dst = np.concatenate([eb, ea])
        order = np.lexsort((dst, src))
        indices = dst[order].astype(np.int32)
        counts = np.bincount(src, minlength=n + 1) if len(src) else np.zeros(n + 1, dtype=np.int64)
        indptr = np.zeros(n + 2, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])

        uf = UnionFind(n + 1)
        union = uf.union
        forest = 0
        for a, b in zip(ea.tolist(), eb.tolist()):
            if union(a, b):
                forest += 1
        labels = np.asarray(uf.labels(), dtype=np.int32)
        sizes_arr = np.bincount(labels[1:], minlength=n + 1)
        reps = np.nonzero(sizes_arr)[0]
        sizes = dict(zip(reps.tolist(), sizes_arr[reps].tolist()))
        for arr in (indptr, indices, ea, eb, labels):
            arr.setflags(write=False)
        return cls(n, indptr, indices, ea, eb, labels, sizes, forest, babylonian)

    @property
    def num_edges(self) -> int:
        return len(self.edge_a)

    @property
    def num_components(self) -> int:
        return len(self.component_sizes)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degrees(self) -> np.ndarray:
        """Degree of every vertex; index 0 is a dummy."""
        return np.diff(self.indptr)

    def forward_sets(self) -> list[frozenset[int]]:
        """Per vertex, the set of neighbours larger than it (cached)."""
        cached = self._nbr_cache.get("forward")
        if cached is None:
            cached = [frozenset()] * (self.n + 1)
            for v in range(1, self.n + 1):
                nb = self.neighbors(v)
                if len(nb):
                    cached[v] = frozenset(nb[nb > v].tolist())
            self._nbr_cache["forward"] = cached
        return cached

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.edge_a.tolist(), self.edge_b.tolist()))

    def component_vertices(self, representative: int) -> np.ndarray:
        return np.nonzero(self.component_id == representative)[0].astype(np.int64)

    def digest(self) -> str:
        """SHA-256 over ``n`` and the sorted edge list."""
        h = hashlib.sha256(f"n={self.n};".encode())
        h.update(np.ascontiguousarray(self.edge_a, dtype="<i8").tobytes())
        h.update(np.ascontiguousarray(self.edge_b, dtype="<i8").tobytes())
        return h.hexdigest()


@dataclass(frozen=True)
class ComponentSummary:
    representative: int
    size: int
    edge_count: int
    has_triangle: bool


def build(n: int, *, ceiling: int = DEFAULT_BUILD_CEILING) -> BabylonGraph:
    """``B_n``: vertices ``1..n``, edges the Pythagorean leg pairs."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > ceiling:
        raise ResourceGuardError("build-ceiling", n, ceiling)
    ea, eb = edge_arrays(n)
    return BabylonGraph._assemble(n, ea, eb, babylonian=True)


def _edge_counts(g: BabylonGraph) -> dict[int, int]:
    labels = g.component_id[g.edge_a]
    reps, counts = np.unique(labels, return_counts=True)
    return dict(zip(reps.tolist(), counts.tolist()))


def components(g: BabylonGraph) -> list[ComponentSummary]:
    """Summaries of all components, ordered by representative."""
    from .complex import enumerate_triangles

    edge_counts = _edge_counts(g)
    with_triangle = {int(g.component_id[t[0]]) for t in enumerate_triangles(g)}
    return [
        ComponentSummary(rep, size, edge_counts.get(rep, 0), rep in with_triangle)
        for rep, size in sorted(g.component_sizes.items())
    ]


def main_component(g: BabylonGraph) -> tuple[ComponentSummary, list[int]]:
    """Largest component; ties go to the smallest representative."""
    from .complex import enumerate_triangles

    rep = min(g.component_sizes, key=lambda r: (-g.component_sizes[r], r))
    vertices = g.component_vertices(rep)
    edge_count = int(np.count_nonzero(g.component_id[g.edge_a] == rep))
    has_triangle = any(g.component_id[t[0]] == rep for t in enumerate_triangles(g))
    summary = ComponentSummary(rep, g.component_sizes[rep], edge_count, has_triangle)
    return summary, vertices.tolist()


def _eccentricity_max(adj, sources: np.ndarray) -> int:
    from scipy.sparse.csgraph import shortest_path

    dist = shortest_path(adj, directed=False, unweighted=True, indices=sources)
    return int(dist.max())


def diameter(
    g: BabylonGraph,
    component: ComponentSummary,
    *,
    workers: int | None = None,
    ceiling: int = DEFAULT_DIAMETER_CEILING,
    chunk: int = 512,
) -> int:
    """Exact diameter of one component by breadth-first search from every vertex.

    Sources are processed in chunks, optionally on a thread pool; the result
    is a plain maximum and so independent of scheduling.
    """
    from scipy.sparse import csr_matrix

    if component.size > ceiling:
        raise ResourceGuardError("diameter-component-size", component.size, ceiling)
    if component.size == 1:
        return 0
    verts = g.component_vertices(component.representative)
    local = np.full(g.n + 1, -1, dtype=np.int64)
    local[verts] = np.arange(len(verts))
    mask = g.component_id[g.edge_a] == component.representative
    ra, rb = local[g.edge_a[mask]], local[g.edge_b[mask]]
    m = len(verts)
    adj = csr_matrix((np.ones(len(ra), dtype=np.int8), (ra, rb)), shape=(m, m))
    chunks = [np.arange(i, min(i + chunk, m)) for i in range(0, m, chunk)]
    workers = workers or min(len(chunks), os.cpu_count() or 1)
    if workers <= 1:
        return max(_eccentricity_max(adj, c) for c in chunks)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return max(pool.map(lambda c: _eccentricity_max(adj, c), chunks))


def isolated_vertices(g: BabylonGraph) -> list[int]:
    deg = g.degrees()
    return (np.nonzero(deg[1:] == 0)[0] + 1).tolist()


def leaves(g: BabylonGraph) -> list[int]:
    deg = g.degrees()
    return (np.nonzero(deg[1:] == 1)[0] + 1).tolist()


def degree_histogram(g: BabylonGraph) -> dict[int, int]:
    deg, counts = np.unique(g.degrees()[1:], return_counts=True)
    return dict(zip(deg.tolist(), counts.tolist()))


def find_scaling_path(
    v: int,
    max_depth: int = 8,
    bound: int | None = None,
    multiple: int | None = None,
) -> list[int] | None:
    """Shortest path in the infinite graph from ``v`` to a multiple ``m*v``, ``m >= 2``.

    The search only visits vertices ``<= bound`` (default ``100*v``). With
    ``multiple`` given, the target is exactly ``multiple*v``; otherwise any
    proper multiple ends the search. Neighbours are expanded in ascending
    order, so among equally short paths the lexicographically first wins.
    """
    if v < 1:
        raise ValueError(f"v must be >= 1, got {v}")
    if multiple is not None and multiple < 2:
        raise ValueError(f"multiple must be >= 2, got {multiple}")
    bound = 100 * v if bound is None else bound

    def is_target(x: int) -> bool:
        if multiple is not None:
            return x == multiple * v
        return x != v and x % v == 0

    parent = {v: None}
    frontier = deque([(v, 0)])
    while frontier:
        x, depth = frontier.popleft()
        if depth >= max_depth:
            continue
        for y in neighbors_unbounded(x):
            if y > bound or y in parent:
                continue
            parent[y] = x
            if is_target(y):
                path = [y]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            frontier.append((y, depth + 1))
    return None
