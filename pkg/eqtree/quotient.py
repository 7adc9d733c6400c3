import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from eqtree.automorphism import EquippedColoredTree, validate_automorphism
from eqtree.colored_tree import ColoredTree, validate_tree
from eqtree.errors import (
    CentralOrbitNotFixed,
    CentralWeightNotOne,
    DivisibilityViolated,
    DocumentError,
    InputError,
    InvariantBreach,
    LoopPresent,
)

logger = logging.getLogger(__name__)

QEdge = Tuple[int, int, int]


@dataclass(frozen=True)
class ExpandedRanks:
    """Ranks the quotient vertices take in the expanded tree"""

    rank: Tuple[int, ...]
    centers: Tuple[int, ...]


@dataclass(frozen=True)
class QuotientTree:
    m: int
    weight: Tuple[int, ...]
    qedges: Tuple[QEdge, ...]
    k: int
    # (vertex, color) of the loop left by a swapped central edge
    loop: Optional[Tuple[int, int]] = None
    shape: Optional[ColoredTree] = field(default=None, compare=False, repr=False)

    @property
    def n(self) -> int:
        """Vertex count of the expanded tree"""
        return sum(self.weight)

    @cached_property
    def expanded(self) -> ExpandedRanks:
        return expanded_ranks(self)

    def normalized(self) -> "QuotientTree":
        """Vertices reordered by expanded rank (descending), then index"""
        rank = self.expanded.rank
        order = sorted(range(self.m), key=lambda a: (-rank[a], a))
        new_id = [0] * self.m
        for i, a in enumerate(order):
            new_id[a] = i
        loop = None
        if self.loop is not None:
            loop = (new_id[self.loop[0]], self.loop[1])
        return make_quotient(
            self.m,
            [self.weight[a] for a in order],
            [(new_id[a], new_id[b], color) for a, b, color in self.qedges],
            self.k,
            loop,
        )


def make_quotient(
    m: int,
    weights: Sequence[int],
    edges: Sequence[Sequence[int]],
    k: int,
    loop: Optional[Tuple[int, int]] = None,
) -> QuotientTree:
    """Validate the tree law, weights and loop; edges are stored sorted"""
    if len(weights) != m:
        raise DocumentError(f"{len(weights)} weights for {m} quotient vertices", "weights")
    for a, w in enumerate(weights):
        if w < 1:
            raise DocumentError(f"weight {w} of vertex {a} is not positive", f"weights[{a}]")
    normalized = sorted(
        ((a, b, color) if a < b else (b, a, color)) for a, b, color in edges
    )
    shape = validate_tree(m, normalized, k)
    if loop is not None:
        vertex, color = loop
        if not 0 <= vertex < m:
            raise DocumentError(f"loop vertex {vertex} is outside 0..{m - 1}", "loop")
        if not 1 <= color <= k:
            raise DocumentError(f"loop color {color} is outside 1..{k}", "loop")
        if weights[vertex] != 2:
            raise DocumentError(
                f"loop sits at vertex {vertex} of weight {weights[vertex]}, expected 2",
                "loop",
            )
        loop = (vertex, color)
    return QuotientTree(
        m=m,
        weight=tuple(weights),
        qedges=tuple(normalized),
        k=k,
        loop=loop,
        shape=shape,
    )


def _multiplicity(q: QuotientTree, a: int, b: int, index: int) -> int:
    """Neighbours a vertex of orbit a has in the adjacent orbit b"""
    wa, wb = q.weight[a], q.weight[b]
    if wb % wa == 0:
        return wb // wa
    if wa % wb == 0:
        return 1
    raise DivisibilityViolated(
        f"weights {wa} and {wb} of the edge ({a}, {b}) do not divide each other",
        f"edges[{index}]",
    )


def expanded_ranks(q: QuotientTree) -> ExpandedRanks:
    """
    Leaf stripping of the expanded tree, run orbit-wise on the quotient.
    A vertex of weight w has max(1, w'/w) neighbours in an adjacent orbit of
    weight w', plus its twin when it carries the loop.
    """
    adjacency = q.shape.adjacency
    m = q.m
    degree = [0] * m
    for a in range(m):
        for b, _, index in adjacency[a]:
            degree[a] += _multiplicity(q, a, b, index)
    if q.loop is not None:
        degree[q.loop[0]] += 1

    removed = [False] * m
    queued = [False] * m
    rank = [0] * m
    remaining = q.n
    leaves = [a for a in range(m) if degree[a] <= 1]
    for a in leaves:
        queued[a] = True
    stage = 0
    while remaining > 2 and leaves:
        stripped = sum(q.weight[a] for a in leaves)
        if stripped == remaining:
            break
        for a in leaves:
            removed[a] = True
            rank[a] = stage
        remaining -= stripped
        next_leaves = []
        for a in leaves:
            for b, _, index in adjacency[a]:
                if removed[b]:
                    continue
                degree[b] -= _multiplicity(q, b, a, index)
                if degree[b] <= 1 and not queued[b]:
                    queued[b] = True
                    next_leaves.append(b)
        leaves = next_leaves
        stage += 1

    if remaining > 2 and not leaves:
        raise DivisibilityViolated(
            "the orbit weights do not expand to a tree", "weights"
        )

    centers = tuple(a for a in range(m) if not removed[a])
    for a in centers:
        rank[a] = stage

    for index, (a, b, color) in enumerate(q.qedges):
        if rank[a] == rank[b]:
            continue
        upper, lower = (a, b) if rank[a] > rank[b] else (b, a)
        if q.weight[lower] % q.weight[upper] != 0:
            raise DivisibilityViolated(
                f"weight {q.weight[upper]} of vertex {upper} does not divide "
                f"weight {q.weight[lower]} of its child {lower}",
                f"edges[{index}]",
            )
    return ExpandedRanks(rank=tuple(rank), centers=centers)


def _glue_orbits(
    et: EquippedColoredTree, allow_loop: bool
) -> Tuple[QuotientTree, List[int]]:
    ranks = et.ranks.rank
    decomposition = et.orbits
    orbits = decomposition.orbits
    order = sorted(range(len(orbits)), key=lambda o: (-ranks[orbits[o][0]], orbits[o][0]))
    new_id = [0] * len(orbits)
    for i, o in enumerate(order):
        new_id[o] = i
    qvertex = [new_id[decomposition.orbit_of[v]] for v in range(et.n)]

    colors: Dict[Tuple[int, int], int] = {}
    loop = None
    for u, v, color in et.tree.edges:
        a, b = qvertex[u], qvertex[v]
        if a == b:
            if not allow_loop:
                raise InvariantBreach(f"edge ({u}, {v}) joins two vertices of one orbit")
            loop = (a, color)
            continue
        key = (a, b) if a < b else (b, a)
        seen = colors.setdefault(key, color)
        if seen != color:
            raise InvariantBreach(
                f"orbits {key} are joined by edges of colors {seen} and {color}"
            )

    quotient = make_quotient(
        len(orbits),
        [len(orbits[o]) for o in order],
        [(a, b, color) for (a, b), color in colors.items()],
        et.tree.k,
        loop,
    )
    logger.debug("quotient: %d vertices -> %d orbits", et.n, quotient.m)
    return quotient, qvertex


def build_quotient(et: EquippedColoredTree) -> QuotientTree:
    return quotient_with_map(et)[0]


def quotient_with_map(et: EquippedColoredTree) -> Tuple[QuotientTree, List[int]]:
    """build_quotient plus the quotient vertex of every tree vertex"""
    for center in et.ranks.centers:
        if et.perm(center) != center:
            raise CentralOrbitNotFixed(
                f"center {center} is mapped to {et.perm(center)}; "
                "the central edge is swapped",
                "perm",
            )
    return _glue_orbits(et, allow_loop=False)


def build_dynamics_quotient(et: EquippedColoredTree) -> QuotientTree:
    """Like build_quotient, but a swapped central edge becomes a loop"""
    return _glue_orbits(et, allow_loop=True)[0]


def expand_quotient(q: QuotientTree) -> EquippedColoredTree:
    return expand_with_blocks(q)[0]


def expand_with_blocks(q: QuotientTree) -> Tuple[EquippedColoredTree, List[int]]:
    """
    Restore the equipped tree. Quotient vertex a becomes the block of ids
    start[a] .. start[a] + w(a) - 1 and P shifts every block cyclically.
    A child orbit of size q is wired to its parent orbit of size p by
    w_j - v_{j mod p}.
    """
    if q.loop is not None:
        raise LoopPresent(f"loop at quotient vertex {q.loop[0]}", "loop")
    expanded = q.expanded
    for center in expanded.centers:
        if q.weight[center] != 1:
            raise CentralWeightNotOne(
                f"central quotient vertex {center} has weight {q.weight[center]}",
                f"weights[{center}]",
            )

    rank = expanded.rank
    order = sorted(range(q.m), key=lambda a: (-rank[a], a))
    start = [0] * q.m
    offset = 0
    for a in order:
        start[a] = offset
        offset += q.weight[a]

    image = [0] * offset
    for a in range(q.m):
        w = q.weight[a]
        for j in range(w):
            image[start[a] + j] = start[a] + (j + 1) % w

    edges = []
    for a, b, color in q.qedges:
        if rank[a] == rank[b]:
            edges.append((start[a], start[b], color))
            continue
        parent, child = (a, b) if rank[a] > rank[b] else (b, a)
        p = q.weight[parent]
        for j in range(q.weight[child]):
            edges.append((start[child] + j, start[parent] + j % p, color))

    try:
        tree = validate_tree(offset, edges, q.k)
        et = validate_automorphism(tree, image)
    except InputError as error:
        raise InvariantBreach(f"expansion produced an invalid equipped tree: {error}")
    return et, start

