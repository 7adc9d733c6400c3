import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from eqtree.errors import (
    ColorOutOfRange,
    Disconnected,
    NotSimple,
    VertexOutOfRange,
    WrongEdgeCount,
    WrongMode,
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, int]


class Mode(Enum):
    GENERIC = "generic"
    MORSE_SMALE = "morse-smale"


# morse-smale mode has exactly these two colors
COLOR_NAMES = {1: "s", 2: "u"}


@dataclass(frozen=True)
class ColoredTree:
    n: int
    edges: Tuple[Edge, ...]
    k: int
    mode: Mode = Mode.GENERIC
    # per vertex: (neighbour, color, edge index)
    adjacency: Tuple[Tuple[Tuple[int, int, int], ...], ...] = field(
        default=(), compare=False, repr=False
    )
    _edge_lookup: Dict[Tuple[int, int], int] = field(
        default_factory=dict, compare=False, repr=False
    )

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_index(self, u: int, v: int) -> Optional[int]:
        return self._edge_lookup.get((u, v) if u < v else (v, u))

    def color_of(self, u: int, v: int) -> Optional[int]:
        index = self.edge_index(u, v)
        return None if index is None else self.edges[index][2]

    def neighbours(self, v: int) -> List[int]:
        return [w for w, _, _ in self.adjacency[v]]

    def color_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for _, _, color in self.edges:
            counts[color] = counts.get(color, 0) + 1
        return counts

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for u, v, color in self.edges:
            graph.add_edge(u, v, color=color)
        return graph


@dataclass(frozen=True)
class RankInfo:
    rank: Tuple[int, ...]
    strip_sequence: Tuple[Tuple[int, ...], ...]
    centers: Tuple[int, ...]
    central_edge: Optional[Tuple[int, int]]

    @property
    def is_central(self) -> bool:
        return len(self.centers) == 1

    @property
    def radius(self) -> int:
        return self.rank[self.centers[0]]


def validate_tree(
    n: int, edges: Sequence[Sequence[int]], k: int, mode: Mode = Mode.GENERIC
) -> ColoredTree:
    """Check the tree laws and build the adjacency lists"""
    if n < 1:
        raise VertexOutOfRange(f"a tree needs at least one vertex, got n={n}", "n")
    if mode == Mode.MORSE_SMALE and k != 2:
        raise WrongMode(f"morse-smale mode requires k=2, got k={k}", "k")
    if k < 1:
        raise ColorOutOfRange(f"k must be positive, got k={k}", "k")

    adjacency: List[List[Tuple[int, int, int]]] = [[] for _ in range(n)]
    lookup: Dict[Tuple[int, int], int] = {}
    normalized: List[Edge] = []

    for index, (u, v, color) in enumerate(edges):
        position = f"edges[{index}]"
        for endpoint in (u, v):
            if not 0 <= endpoint < n:
                raise VertexOutOfRange(
                    f"endpoint {endpoint} of edge ({u}, {v}) is outside 0..{n - 1}",
                    position,
                )
        if u == v:
            raise NotSimple(f"self-loop at vertex {u}", position)
        if not 1 <= color <= k:
            raise ColorOutOfRange(
                f"edge ({u}, {v}) has color {color}, expected 1..{k}", position
            )
        key = (u, v) if u < v else (v, u)
        if key in lookup:
            raise NotSimple(
                f"edge ({u}, {v}) duplicates edges[{lookup[key]}]", position
            )
        lookup[key] = index
        normalized.append((u, v, color))
        adjacency[u].append((v, color, index))
        adjacency[v].append((u, color, index))

    if len(normalized) != n - 1:
        raise WrongEdgeCount(
            f"{len(normalized)} edges on {n} vertices, a tree needs {n - 1}", "edges"
        )

    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        v = stack.pop()
        for w, _, _ in adjacency[v]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    if not all(seen):
        unreachable = seen.index(False)
        raise Disconnected(f"vertex {unreachable} is not reachable from vertex 0", "edges")

    return ColoredTree(
        n=n,
        edges=tuple(normalized),
        k=k,
        mode=mode,
        adjacency=tuple(tuple(a) for a in adjacency),
        _edge_lookup=lookup,
    )


def compute_ranks(tree: ColoredTree) -> RankInfo:
    """
    Delete all leaves until at most two vertices remain. The rank of a vertex
    is the number of deletion rounds it survives.
    """
    n = tree.n
    degree = [tree.degree(v) for v in range(n)]
    removed = [False] * n
    rank = [0] * n
    strip_sequence: List[Tuple[int, ...]] = []

    leaves = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    stage = 0
    while remaining > 2:
        strip_sequence.append(tuple(sorted(leaves)))
        for v in leaves:
            removed[v] = True
            rank[v] = stage
        remaining -= len(leaves)
        next_leaves = []
        for v in leaves:
            for w, _, _ in tree.adjacency[v]:
                if not removed[w]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        next_leaves.append(w)
        leaves = next_leaves
        stage += 1

    centers = tuple(v for v in range(n) if not removed[v])
    for v in centers:
        rank[v] = stage
    strip_sequence.append(centers)

    central_edge = None
    if len(centers) == 2:
        central_edge = (centers[0], centers[1])

    logger.debug("ranks: %d strips, centers %s", stage, centers)
    return RankInfo(
        rank=tuple(rank),
        strip_sequence=tuple(strip_sequence),
        centers=centers,
        central_edge=central_edge,
    )


def relabel(tree: ColoredTree, mapping: Sequence[int]) -> ColoredTree:
    """Rename every vertex v to mapping[v]"""
    edges = [(mapping[u], mapping[v], color) for u, v, color in tree.edges]
    return validate_tree(tree.n, edges, tree.k, tree.mode)
