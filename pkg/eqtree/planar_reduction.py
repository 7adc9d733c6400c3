"""
Reduction of a weighted colored quotient tree to a simple planar graph G.

Every edge of color c is replaced by a path with c internal vertices and a
cycle of length w + 2 is joined to every vertex of weight w. Vertices of
degree at least three in G are exactly the quotient vertices, so the
quotient can be read back from G alone.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Set, Tuple

import networkx as nx

from eqtree.errors import (
    CycleTooShort,
    InputError,
    LoopPresent,
    NotAReductionImage,
    NotAnEdge,
)
from eqtree.quotient import QuotientTree, make_quotient

logger = logging.getLogger(__name__)

# ("vertex", a) | ("subdivision", edge index, position) | ("cycle", a, position)
Provenance = Tuple


class Graph:
    """Mutable simple graph the subdivision and cycle operations act on"""

    def __init__(self, nv: int = 0):
        self.adjacency: List[Set[int]] = [set() for _ in range(nv)]
        self.provenance: List[Optional[Provenance]] = [None] * nv

    @property
    def nv(self) -> int:
        return len(self.adjacency)

    def copy(self) -> "Graph":
        graph = Graph()
        graph.adjacency = [set(neighbours) for neighbours in self.adjacency]
        graph.provenance = list(self.provenance)
        return graph

    def add_vertex(self, tag: Optional[Provenance] = None) -> int:
        self.adjacency.append(set())
        self.provenance.append(tag)
        return len(self.adjacency) - 1

    def add_edge(self, u: int, v: int):
        self.adjacency[u].add(v)
        self.adjacency[v].add(u)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.nv and v in self.adjacency[u]

    def subdivide(self, u: int, v: int, s: int, tag=None) -> List[int]:
        if not self.has_edge(u, v):
            raise NotAnEdge(f"({u}, {v}) is not an edge of the graph", "edge")
        self.adjacency[u].discard(v)
        self.adjacency[v].discard(u)
        path = [self.add_vertex(tag + (i,) if tag else None) for i in range(s)]
        previous = u
        for z in path:
            self.add_edge(previous, z)
            previous = z
        self.add_edge(previous, v)
        return path

    def join_cycle(self, v: int, s: int, tag=None) -> List[int]:
        if s < 3:
            raise CycleTooShort(f"a cycle of length {s} is not simple", "s")
        ring = [self.add_vertex(tag + (i,) if tag else None) for i in range(s - 1)]
        previous = v
        for u in ring:
            self.add_edge(previous, u)
            previous = u
        self.add_edge(previous, v)
        return ring

    def edges(self) -> List[Tuple[int, int]]:
        return sorted(
            (u, v) for u in range(self.nv) for v in self.adjacency[u] if u < v
        )


@dataclass(frozen=True)
class SimpleGraphImage:
    nv: int
    gedges: Tuple[Tuple[int, int], ...]
    provenance: Optional[Tuple[Provenance, ...]] = None

    def without_provenance(self) -> "SimpleGraphImage":
        return SimpleGraphImage(self.nv, self.gedges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.nv))
        graph.add_edges_from(self.gedges)
        return graph


def subdivide_edge(graph: Graph, edge: Tuple[int, int], s: int) -> Graph:
    """Replace the edge by a path with s internal vertices"""
    result = graph.copy()
    result.subdivide(edge[0], edge[1], s)
    return result


def join_cycle(graph: Graph, v: int, s: int) -> Graph:
    """Add a cycle of length s through v"""
    result = graph.copy()
    result.join_cycle(v, s)
    return result


def reduce_to_graph(q: QuotientTree) -> SimpleGraphImage:
    if q.loop is not None:
        raise LoopPresent(f"loop at quotient vertex {q.loop[0]}", "loop")
    graph = Graph()
    for a in range(q.m):
        graph.add_vertex(("vertex", a))
    for index, (a, b, color) in enumerate(q.qedges):
        graph.add_edge(a, b)
        graph.subdivide(a, b, color, ("subdivision", index))
    for a in range(q.m):
        graph.join_cycle(a, q.weight[a] + 2, ("cycle", a))

    logger.debug("reduction: %d quotient vertices -> %d graph vertices", q.m, graph.nv)
    return SimpleGraphImage(
        nv=graph.nv,
        gedges=tuple(graph.edges()),
        provenance=tuple(graph.provenance),
    )


def size_bound(q: QuotientTree, k: Optional[int] = None) -> Tuple[int, int]:
    """(exact vertex count of the reduction, (k + 3) * n), k defaults to q.k"""
    nv = q.m + sum(color for _, _, color in q.qedges) + sum(w + 1 for w in q.weight)
    palette = q.k if k is None else k
    return nv, (palette + 3) * q.n


def recover_quotient(g: SimpleGraphImage, k: Optional[int] = None) -> QuotientTree:
    """
    Read the quotient back from the graph alone: hubs (degree >= 3) are the
    quotient vertices, the degree-2 chain returning to a hub is its weight
    cycle and a chain between two hubs encodes the color of their edge.
    """
    nv = g.nv
    if nv < 1:
        raise NotAReductionImage(f"a reduction image has at least one vertex, got nv={nv}", "nv")
    adjacency: List[List[int]] = [[] for _ in range(nv)]
    seen_edges = set()
    for index, (u, v) in enumerate(g.gedges):
        if not (0 <= u < nv and 0 <= v < nv) or u == v:
            raise NotAReductionImage(f"edge ({u}, {v}) is not a simple edge", f"edges[{index}]")
        key = (min(u, v), max(u, v))
        if key in seen_edges:
            raise NotAReductionImage(f"edge ({u}, {v}) is repeated", f"edges[{index}]")
        seen_edges.add(key)
        adjacency[u].append(v)
        adjacency[v].append(u)

    for v in range(nv):
        if len(adjacency[v]) < 2:
            raise NotAReductionImage(
                f"vertex {v} has degree {len(adjacency[v])}, every image vertex has degree >= 2",
                f"vertices[{v}]",
            )

    hubs = [v for v in range(nv) if len(adjacency[v]) >= 3]
    if not hubs:
        return _recover_single_cycle(nv, adjacency, k)

    hub_id = {v: i for i, v in enumerate(hubs)}
    visited = [False] * nv
    for h in hubs:
        visited[h] = True
    weights: List[Optional[int]] = [None] * len(hubs)
    qedges = []

    links = [0] * len(hubs)
    for h in hubs:
        for first in adjacency[h]:
            if first in hub_id:
                raise NotAReductionImage(
                    f"hubs {h} and {first} are adjacent without a subdivision",
                    f"vertices[{h}]",
                )
            if visited[first]:
                continue
            internal, end = _walk_chain(adjacency, visited, h, first, hub_id)
            if end == h:
                if weights[hub_id[h]] is not None:
                    raise NotAReductionImage(f"hub {h} carries two cycles", f"vertices[{h}]")
                # cycle length is internal + 1 = w + 2
                weights[hub_id[h]] = internal - 1
            else:
                links[hub_id[h]] += 1
                links[hub_id[end]] += 1
                qedges.append((hub_id[h], hub_id[end], internal))
        if weights[hub_id[h]] is None:
            raise NotAReductionImage(f"hub {h} carries no cycle", f"vertices[{h}]")

    if not all(visited):
        stray = visited.index(False)
        raise NotAReductionImage(
            f"vertex {stray} lies on a component without hubs", f"vertices[{stray}]"
        )

    for h in hubs:
        if len(adjacency[h]) != links[hub_id[h]] + 2:
            raise NotAReductionImage(
                f"hub {h} has degree {len(adjacency[h])}, expected {links[hub_id[h]] + 2}",
                f"vertices[{h}]",
            )

    palette = k if k is not None else max((c for _, _, c in qedges), default=1)
    try:
        return make_quotient(len(hubs), weights, qedges, palette)
    except InputError as error:
        raise NotAReductionImage(f"hubs do not form a weighted colored tree: {error}")


def _walk_chain(adjacency, visited, hub: int, first: int, hub_id) -> Tuple[int, int]:
    internal = 0
    previous, current = hub, first
    while current not in hub_id:
        visited[current] = True
        internal += 1
        a, b = adjacency[current]
        previous, current = current, (b if a == previous else a)
    return internal, current


def _recover_single_cycle(nv: int, adjacency, k: Optional[int]) -> QuotientTree:
    previous, current, length = 0, adjacency[0][0], 1
    while current != 0:
        a, b = adjacency[current]
        previous, current = current, (b if a == previous else a)
        length += 1
    if length != nv:
        raise NotAReductionImage("graph without hubs must be a single cycle", "edges")
    return make_quotient(1, [nv - 2], [], k if k is not None else 1)
