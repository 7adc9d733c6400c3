import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy.combinatorics import Permutation

from eqtree.colored_tree import ColoredTree, RankInfo, compute_ranks, relabel, validate_tree
from eqtree.errors import AdjacencyBroken, ColorBroken, NotAnEdge, NotBijective

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexPermutation:
    image: Tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.image[v]

    def __len__(self) -> int:
        return len(self.image)

    @cached_property
    def as_sympy(self) -> Permutation:
        return Permutation(list(self.image))

    def inverse(self) -> "VertexPermutation":
        inverse = [0] * len(self.image)
        for v, w in enumerate(self.image):
            inverse[w] = v
        return VertexPermutation(tuple(inverse))

    def squared(self) -> "VertexPermutation":
        return VertexPermutation(tuple(self.image[w] for w in self.image))


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: Tuple[Tuple[int, ...], ...]
    orbit_of: Tuple[int, ...]
    # index of each vertex inside its orbit
    position: Tuple[int, ...]

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(orbit) for orbit in self.orbits)

    def size_of(self, v: int) -> int:
        return len(self.orbits[self.orbit_of[v]])


@dataclass(frozen=True)
class EquippedColoredTree:
    tree: ColoredTree
    perm: VertexPermutation

    @property
    def n(self) -> int:
        return self.tree.n

    @cached_property
    def ranks(self) -> RankInfo:
        return compute_ranks(self.tree)

    @cached_property
    def orbits(self) -> OrbitDecomposition:
        return compute_orbits(self)


class NormalCase(Enum):
    CENTRAL_DOUBLED = "central-doubled"
    FIXED = "fixed"
    SWAPPED = "swapped"


@dataclass(frozen=True)
class HalfTree:
    """Component of the first center after cutting a swapped central edge"""

    equipped: EquippedColoredTree
    root: int
    central_color: int
    # original id of every half vertex
    original: Tuple[int, ...]


@dataclass(frozen=True)
class Normalized:
    case: NormalCase
    equipped: Optional[EquippedColoredTree] = None
    half: Optional[HalfTree] = None


@dataclass(frozen=True)
class LawViolation:
    law: str
    orbits: Tuple[int, int]
    detail: str


@dataclass(frozen=True)
class LawReport:
    pairs_checked: int
    violations: Tuple[LawViolation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self):
        return {
            "passed": self.passed,
            "pairs_checked": self.pairs_checked,
            "violations": [
                {"law": v.law, "orbits": list(v.orbits), "detail": v.detail}
                for v in self.violations
            ],
        }


def validate_automorphism(
    tree: ColoredTree, perm: Union[VertexPermutation, Sequence[int]]
) -> EquippedColoredTree:
    image = tuple(perm.image if isinstance(perm, VertexPermutation) else perm)
    if len(image) != tree.n:
        raise NotBijective(
            f"permutation table has {len(image)} entries, expected {tree.n}", "perm"
        )
    taken = [-1] * tree.n
    for v, w in enumerate(image):
        if not 0 <= w < tree.n:
            raise NotBijective(f"image {w} of vertex {v} is outside 0..{tree.n - 1}", f"perm[{v}]")
        if taken[w] >= 0:
            raise NotBijective(
                f"vertices {taken[w]} and {v} are both mapped to {w}", f"perm[{v}]"
            )
        taken[w] = v

    for index, (u, v, color) in enumerate(tree.edges):
        pu, pv = image[u], image[v]
        image_color = tree.color_of(pu, pv)
        if image_color is None:
            raise AdjacencyBroken(
                f"edge ({u}, {v}) is mapped to ({pu}, {pv}), which is not an edge",
                f"edges[{index}]",
            )
        if image_color != color:
            raise ColorBroken(
                f"edge ({u}, {v}) has color {color} but its image ({pu}, {pv}) "
                f"has color {image_color}",
                f"edges[{index}]",
            )
    return EquippedColoredTree(tree=tree, perm=VertexPermutation(image))


def compute_orbits(et: EquippedColoredTree) -> OrbitDecomposition:
    """Cycles of P, each starting at its least vertex, ordered by that vertex"""
    image = et.perm.image
    orbit_of = [-1] * et.n
    position = [0] * et.n
    orbits = []
    for start in range(et.n):
        if orbit_of[start] >= 0:
            continue
        index = len(orbits)
        cycle = []
        v = start
        while orbit_of[v] < 0:
            orbit_of[v] = index
            position[v] = len(cycle)
            cycle.append(v)
            v = image[v]
        orbits.append(tuple(cycle))
    return OrbitDecomposition(
        orbits=tuple(orbits),
        orbit_of=tuple(orbit_of),
        position=tuple(position),
    )


def cycle_type(et: EquippedColoredTree) -> Tuple[int, ...]:
    return tuple(sorted(et.orbits.sizes))


def edge_period(et: EquippedColoredTree, edge: Tuple[int, int]) -> int:
    u, v = edge
    if not (0 <= u < et.n and 0 <= v < et.n) or et.tree.color_of(u, v) is None:
        raise NotAnEdge(f"({u}, {v}) is not an edge of the tree", "edge")
    start = {u, v}
    a, b = et.perm(u), et.perm(v)
    period = 1
    while {a, b} != start:
        a, b = et.perm(a), et.perm(b)
        period += 1
    return period


def check_structure_laws(et: EquippedColoredTree) -> LawReport:
    """
    For every pair of neighbour orbits O1 (higher rank, size p) and O2
    (size q): p divides q, the neighbours of v_i in O2 are w_{s+i},
    w_{s+i+p}, ... for one offset s, and all O1-O2 edges share a color.
    """
    ranks = et.ranks.rank
    decomposition = et.orbits
    orbit_of, position = decomposition.orbit_of, decomposition.position
    violations: List[LawViolation] = []

    for index, orbit in enumerate(decomposition.orbits):
        orbit_ranks = {ranks[v] for v in orbit}
        if len(orbit_ranks) > 1:
            violations.append(
                LawViolation("same-rank", (index, index), f"ranks {sorted(orbit_ranks)}")
            )

    pairs: Dict[Tuple[int, int], List[Tuple[int, int, int]]] = defaultdict(list)
    for u, v, color in et.tree.edges:
        if ranks[u] < ranks[v]:
            u, v = v, u
        pairs[(orbit_of[u], orbit_of[v])].append((position[u], position[v], color))

    for (o1, o2), links in pairs.items():
        p = len(decomposition.orbits[o1])
        q = len(decomposition.orbits[o2])
        colors = {color for _, _, color in links}
        if len(colors) > 1:
            violations.append(
                LawViolation("color", (o1, o2), f"colors {sorted(colors)} between orbits")
            )
        if o1 == o2:
            # the swapped central edge joins the two vertices of one orbit
            if p != 2 or len(links) != 1:
                violations.append(
                    LawViolation("central", (o1, o2), f"orbit of size {p} with an inner edge")
                )
            continue
        if q % p != 0:
            violations.append(
                LawViolation("divisibility", (o1, o2), f"{q} mod {p} = {q % p}")
            )
            continue
        neighbours: Dict[int, set] = defaultdict(set)
        for i, j, _ in links:
            neighbours[i].add(j)
        offset = min(neighbours[0]) % p if neighbours[0] else 0
        for i in range(p):
            expected = {(offset + i + t * p) % q for t in range(q // p)}
            if neighbours[i] != expected:
                violations.append(
                    LawViolation(
                        "wiring",
                        (o1, o2),
                        f"v_{i} is joined to positions {sorted(neighbours[i])}, "
                        f"expected {sorted(expected)}",
                    )
                )
                break

    return LawReport(pairs_checked=len(pairs), violations=tuple(violations))


def conjugate(et: EquippedColoredTree, mapping: Sequence[int]) -> EquippedColoredTree:
    """Relabel by rho and conjugate P into rho P rho^-1"""
    tree = relabel(et.tree, mapping)
    image = [0] * et.n
    for v in range(et.n):
        image[mapping[v]] = mapping[et.perm(v)]
    return validate_automorphism(tree, image)


def normalize(et: EquippedColoredTree) -> Normalized:
    """
    Bring the tree to a bicentral form with both centers fixed, or cut a
    swapped central edge and keep the half of the first center under P^2.
    """
    ranks = et.ranks
    if ranks.is_central:
        doubled = _double_central(et, ranks.centers[0])
        logger.debug("normalize: central tree doubled to %d vertices", doubled.n)
        return Normalized(NormalCase.CENTRAL_DOUBLED, equipped=doubled)

    v1, v2 = ranks.centers
    if et.perm(v1) == v1:
        return Normalized(NormalCase.FIXED, equipped=et)

    half = _half_tree(et, v1, v2)
    logger.debug("normalize: swapped centers, half tree of %d vertices", half.equipped.n)
    return Normalized(NormalCase.SWAPPED, half=half)


def _double_central(et: EquippedColoredTree, center: int) -> EquippedColoredTree:
    n = et.n
    edges = list(et.tree.edges)
    edges += [(u + n, v + n, color) for u, v, color in et.tree.edges]
    edges.append((center, center + n, 1))
    tree = validate_tree(2 * n, edges, et.tree.k, et.tree.mode)
    image = list(et.perm.image) + [w + n for w in et.perm.image]
    return validate_automorphism(tree, image)


def _half_tree(et: EquippedColoredTree, v1: int, v2: int) -> HalfTree:
    tree = et.tree
    inside = [False] * tree.n
    inside[v1] = True
    stack = [v1]
    while stack:
        x = stack.pop()
        for y, _, _ in tree.adjacency[x]:
            if not inside[y] and y != v2:
                inside[y] = True
                stack.append(y)

    original = tuple(v for v in range(tree.n) if inside[v])
    new_id = {v: i for i, v in enumerate(original)}
    edges = [
        (new_id[u], new_id[v], color)
        for u, v, color in tree.edges
        if inside[u] and inside[v]
    ]
    square = et.perm.squared()
    image = [new_id[square(v)] for v in original]
    half_tree = validate_tree(len(original), edges, tree.k, tree.mode)
    return HalfTree(
        equipped=validate_automorphism(half_tree, image),
        root=new_id[v1],
        central_color=tree.color_of(v1, v2),
        original=original,
    )


def double_swapped(half: HalfTree) -> EquippedColoredTree:
    """
    Two copies of the half joined root to root, P sending a vertex x of the
    first copy to its twin and the twin of x to P_A(x).
    """
    inner = half.equipped
    n = inner.n
    edges = list(inner.tree.edges)
    edges += [(u + n, v + n, color) for u, v, color in inner.tree.edges]
    edges.append((half.root, half.root + n, half.central_color))
    tree = validate_tree(2 * n, edges, inner.tree.k, inner.tree.mode)
    image = [v + n for v in range(n)] + list(inner.perm.image)
    return validate_automorphism(tree, image)
