"""Exhaustive conjugation search, the ground truth for small instances"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from eqtree.automorphism import EquippedColoredTree
from eqtree.errors import TooLarge
from eqtree.modules.canon_module import necessary_conditions
from eqtree.modules.iso_module import IsoModule

logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 12


@dataclass(frozen=True)
class IsoWitness:
    mapping: Tuple[int, ...]

    def to_dict(self):
        return {str(v): w for v, w in enumerate(self.mapping)}


def _bfs(et: EquippedColoredTree) -> Tuple[List[int], List[int], List[int]]:
    parent = [-1] * et.n
    color = [0] * et.n
    order = [0]
    seen = [False] * et.n
    seen[0] = True
    for v in order:
        for w, c, _ in et.tree.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                color[w] = c
                order.append(w)
    return order, parent, color


def iso_brute(
    et1: EquippedColoredTree, et2: EquippedColoredTree, limit: int = DEFAULT_LIMIT
) -> Optional[IsoWitness]:
    for et in (et1, et2):
        if et.n > limit:
            raise TooLarge(f"{et.n} vertices exceed the brute-force limit {limit}", "n")
    if not necessary_conditions(et1, et2):
        return None

    n = et1.n
    order, parent, parent_color = _bfs(et1)
    p1, p2 = et1.perm, et2.perm
    p1_inverse = p1.inverse()
    size1, size2 = et1.orbits, et2.orbits
    mapping = [-1] * n
    used = [False] * n

    def consistent(v: int, w: int) -> bool:
        if et1.tree.degree(v) != et2.tree.degree(w):
            return False
        if size1.size_of(v) != size2.size_of(w):
            return False
        forward = mapping[p1(v)]
        if forward >= 0 and forward != p2(w):
            return False
        backward = mapping[p1_inverse(v)]
        if backward >= 0 and p2(backward) != w:
            return False
        return True

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        if depth == 0:
            candidates = range(n)
        else:
            anchor = mapping[parent[v]]
            candidates = [
                w for w, c, _ in et2.tree.adjacency[anchor] if c == parent_color[v]
            ]
        for w in candidates:
            if used[w]:
                continue
            mapping[v] = w
            used[w] = True
            if consistent(v, w) and extend(depth + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    if not extend(0):
        return None
    logger.debug("brute force: witness %s", mapping)
    return IsoWitness(tuple(mapping))


class BruteForceModule(IsoModule):
    def __init__(self, limit: int = DEFAULT_LIMIT):
        self.max_vertices = limit

    def decide(self, et1: EquippedColoredTree, et2: EquippedColoredTree) -> bool:
        return iso_brute(et1, et2, self.max_vertices) is not None

    def get_name(self):
        return "Brute-force conjugation search"
