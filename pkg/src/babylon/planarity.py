"""Left-right planarity test (de Fraysseix, de Mendez, Rosenstiehl; Brandes' formulation).

Only the decision is computed. Both depth-first passes are iterative so deep
DFS trees do not hit the interpreter's recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .graph import BabylonGraph

__all__ = ["PlanarityVerdict", "is_planar", "lr_planar"]


@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool
    # edge set of a Kuratowski subdivision; extraction is not implemented
    witness: tuple[tuple[int, int], ...] | None = None


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> "_Interval":
        return _Interval(self.low, self.high)


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _LRState:
    def __init__(self, adjacency: Mapping[Hashable, Sequence[Hashable]]):
        self.adj = adjacency
        self.height: dict = {v: None for v in adjacency}
        self.parent_edge: dict = {v: None for v in adjacency}
        self.lowpt: dict = {}
        self.lowpt2: dict = {}
        self.nesting_depth: dict = {}
        self.out_adj: dict = {v: [] for v in adjacency}
        self.ref: dict = {}
        self.lowpt_edge: dict = {}
        self.stack_bottom: dict = {}
        self.S: list[_ConflictPair] = []

    # -- phase 1: orientation, lowpoints, nesting depths ---------------------

    def orient(self, root) -> None:
        height, parent_edge = self.height, self.parent_edge
        lowpt, lowpt2, nesting = self.lowpt, self.lowpt2, self.nesting_depth
        seen_edges: set = set()
        height[root] = 0
        next_idx = {root: 0}
        stack = [root]
        descended: set = set()
        while stack:
            v = stack.pop()
            e = parent_edge[v]
            nbrs = self.adj[v]
            i = next_idx[v]
            while i < len(nbrs):
                w = nbrs[i]
                vw = (v, w)
                if vw not in descended:
                    if frozenset(vw) in seen_edges:
                        i += 1
                        continue
                    seen_edges.add(frozenset(vw))
                    self.out_adj[v].append(w)
                    lowpt[vw] = height[v]
                    lowpt2[vw] = height[v]
                    if height[w] is None:
                        parent_edge[w] = vw
                        height[w] = height[v] + 1
                        next_idx[w] = 0
                        descended.add(vw)
                        next_idx[v] = i
                        stack.append(v)
                        stack.append(w)
                        break
                    lowpt[vw] = height[w]
                # tree edge returning from the child, or a back edge
                nesting[vw] = 2 * lowpt[vw] + (1 if lowpt2[vw] < height[v] else 0)
                if e is not None:
                    if lowpt[vw] < lowpt[e]:
                        lowpt2[e] = min(lowpt[e], lowpt2[vw])
                        lowpt[e] = lowpt[vw]
                    elif lowpt[vw] > lowpt[e]:
                        lowpt2[e] = min(lowpt2[e], lowpt[vw])
                    else:
                        lowpt2[e] = min(lowpt2[e], lowpt2[vw])
                i += 1
            else:
                next_idx[v] = i

    # -- phase 2: testing ----------------------------------------------------

    def _top(self):
        return self.S[-1] if self.S else None

    def _conflicting(self, interval: _Interval, b) -> bool:
        return not interval.empty() and self.lowpt[interval.high] > self.lowpt[b]

    def _lowest(self, p: _ConflictPair) -> int:
        if p.left.empty():
            return self.lowpt[p.right.low]
        if p.right.empty():
            return self.lowpt[p.left.low]
        return min(self.lowpt[p.left.low], self.lowpt[p.right.low])

    def _add_constraints(self, ei, e) -> bool:
        lowpt, ref, S = self.lowpt, self.ref, self.S
        p = _ConflictPair()
        # merge return edges of ei into p.right
        while True:
            q = S.pop()
            if not q.left.empty():
                q.swap()
            if not q.left.empty():
                return False
            if lowpt[q.right.low] > lowpt[e]:
                if p.right.empty():
                    p.right = q.right.copy()
                else:
                    ref[p.right.low] = q.right.high
                p.right.low = q.right.low
            else:
                ref[q.right.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into p.left
        while S and (self._conflicting(S[-1].left, ei) or self._conflicting(S[-1].right, ei)):
            q = S.pop()
            if self._conflicting(q.right, ei):
                q.swap()
            if self._conflicting(q.right, ei):
                return False
            ref[p.right.low] = q.right.high
            if q.right.low is not None:
                p.right.low = q.right.low
            if p.left.empty():
                p.left = q.left.copy()
            else:
                ref[p.left.low] = q.left.high
            p.left.low = q.left.low
        if not (p.left.empty() and p.right.empty()):
            S.append(p)
        return True

    def _trim_back_edges(self, u) -> None:
        S, ref, height = self.S, self.ref, self.height
        while S and self._lowest(S[-1]) == height[u]:
            S.pop()
        if S:
            p = S.pop()
            while p.left.high is not None and p.left.high[1] == u:
                p.left.high = ref.get(p.left.high)
            if p.left.high is None and p.left.low is not None:
                ref[p.left.low] = p.right.low
                p.left.low = None
            while p.right.high is not None and p.right.high[1] == u:
                p.right.high = ref.get(p.right.high)
            if p.right.high is None and p.right.low is not None:
                ref[p.right.low] = p.left.low
                p.right.low = None
            S.append(p)

    def test(self, root) -> bool:
        height, parent_edge, lowpt = self.height, self.parent_edge, self.lowpt
        ordered = {
            v: sorted(ws, key=lambda w, v=v: self.nesting_depth[(v, w)])
            for v, ws in self.out_adj.items()
        }
        next_idx = {root: 0}
        descended: set = set()
        stack = [root]
        while stack:
            v = stack.pop()
            e = parent_edge[v]
            children = ordered[v]
            i = next_idx[v]
            paused = False
            while i < len(children):
                w = children[i]
                ei = (v, w)
                if ei not in descended:
                    self.stack_bottom[ei] = self._top()
                    if ei == parent_edge[w]:
                        descended.add(ei)
                        next_idx[v] = i
                        next_idx[w] = 0
                        stack.append(v)
                        stack.append(w)
                        paused = True
                        break
                    self.lowpt_edge[ei] = ei
                    self.S.append(_ConflictPair(right=_Interval(ei, ei)))
                if lowpt[ei] < height[v]:
                    if i == 0:
                        self.lowpt_edge[e] = self.lowpt_edge[ei]
                    elif not self._add_constraints(ei, e):
                        return False
                i += 1
            if paused:
                continue
            next_idx[v] = i
            if e is not None:
                u = e[0]
                self._trim_back_edges(u)
                if lowpt[e] < height[u]:
                    top = self.S[-1]
                    hl, hr = top.left.high, top.right.high
                    if hl is not None and (hr is None or lowpt[hl] > lowpt[hr]):
                        self.ref[e] = hl
                    else:
                        self.ref[e] = hr
        return True


def lr_planar(adjacency: Mapping[Hashable, Iterable[Hashable]]) -> bool:
    """Planarity of a simple undirected graph given as a symmetric adjacency map."""
    adj = {v: list(ws) for v, ws in adjacency.items()}
    nv = len(adj)
    ne = sum(len(ws) for ws in adj.values()) // 2
    if nv >= 3 and ne > 3 * nv - 6:
        return False
    state = _LRState(adj)
    roots = []
    for v in adj:
        if state.height[v] is None:
            roots.append(v)
            state.orient(v)
    return all(state.test(r) for r in roots)


def _component_adjacency(g: BabylonGraph, rep: int) -> dict[int, list[int]]:
    verts = g.component_vertices(rep).tolist()
    return {v: g.neighbors(v).tolist() for v in verts}


def is_planar(g: BabylonGraph) -> PlanarityVerdict:
    """Planar iff every component is; trees and isolated vertices skip the test."""
    edge_counts: dict[int, int] = {}
    for rep in g.component_id[g.edge_a].tolist():
        edge_counts[rep] = edge_counts.get(rep, 0) + 1
    for rep, size in sorted(g.component_sizes.items()):
        m = edge_counts.get(rep, 0)
        if m <= size - 1 or size < 5:
            continue
        if m > 3 * size - 6:
            return PlanarityVerdict(False)
        if not lr_planar(_component_adjacency(g, rep)):
            return PlanarityVerdict(False)
    return PlanarityVerdict(True)
