"""
Canonical codes of quotient trees and equipped trees.

A rooted quotient is encoded bottom-up, one height level at a time: the
tuple of a vertex is (weight, color_1, id_1, color_2, id_2, ...) over its
children sorted by (color, id). The distinct tuples of a level are interned
through a dictionary, sorted, and numbered after the ids of lower levels,
so ids depend on the structure only. The code serializes every level table
followed by the root part, as length-prefixed big-endian integers after a
version byte and a kind byte.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from eqtree.automorphism import EquippedColoredTree, NormalCase, Normalized, normalize
from eqtree.quotient import QuotientTree, build_quotient, quotient_with_map

VERSION = 1


class CodeKind(IntEnum):
    CENTRAL = 0x01
    BICENTRAL = 0x02
    LOOP = 0x03
    ROOTED = 0x04
    CENTRAL_DOUBLED = 0x11
    FIXED = 0x12
    SWAPPED = 0x13


CASE_KINDS = {
    NormalCase.CENTRAL_DOUBLED: CodeKind.CENTRAL_DOUBLED,
    NormalCase.FIXED: CodeKind.FIXED,
    NormalCase.SWAPPED: CodeKind.SWAPPED,
}


@dataclass(frozen=True)
class CanonicalCode:
    data: bytes

    @property
    def kind(self) -> CodeKind:
        return CodeKind(self.data[1])

    def hex(self) -> str:
        return self.data.hex()


def _level_tables(
    q: QuotientTree, roots: Sequence[int]
) -> Tuple[List[int], List[List[Tuple[int, ...]]]]:
    adjacency = q.shape.adjacency
    seen = [False] * q.m
    children: List[List[Tuple[int, int]]] = [[] for _ in range(q.m)]
    order = list(roots)
    for r in roots:
        seen[r] = True
    # the edge between two roots is left out
    for a in order:
        for b, color, _ in adjacency[a]:
            if not seen[b]:
                seen[b] = True
                children[a].append((b, color))
                order.append(b)

    height = [0] * q.m
    for a in reversed(order):
        for b, _ in children[a]:
            height[a] = max(height[a], height[b] + 1)

    levels: Dict[int, List[int]] = {}
    for a in order:
        levels.setdefault(height[a], []).append(a)

    ids = [0] * q.m
    next_id = 0
    tables = []
    for h in range(max(levels) + 1):
        members = levels.get(h, [])
        keys = []
        interned: Dict[Tuple[int, ...], None] = {}
        for a in members:
            kids = sorted((color, ids[b]) for b, color in children[a])
            key = (q.weight[a],) + tuple(x for pair in kids for x in pair)
            keys.append(key)
            interned.setdefault(key, None)
        distinct = sorted(interned)
        number = {key: next_id + i for i, key in enumerate(distinct)}
        for a, key in zip(members, keys):
            ids[a] = number[key]
        next_id += len(distinct)
        tables.append(distinct)
    return ids, tables


def _serialize(kind: CodeKind, tables, tail: Sequence[int]) -> CanonicalCode:
    flat = [len(tables)]
    for table in tables:
        flat.append(len(table))
        for key in table:
            flat.append(len(key))
            flat.extend(key)
    flat.append(len(tail))
    flat.extend(tail)
    payload = np.asarray(flat, dtype=">u4").tobytes()
    return CanonicalCode(bytes([VERSION, int(kind)]) + payload)


def _encode(
    q: QuotientTree, root: Optional[int], extra: Sequence[int] = ()
) -> CanonicalCode:
    if root is not None:
        ids, tables = _level_tables(q, [root])
        return _serialize(CodeKind.ROOTED, tables, [ids[root], *extra])
    if q.loop is not None:
        vertex, color = q.loop
        ids, tables = _level_tables(q, [vertex])
        return _serialize(CodeKind.LOOP, tables, [color, ids[vertex]])

    centers = q.expanded.centers
    ids, tables = _level_tables(q, centers)
    if len(centers) == 1:
        return _serialize(CodeKind.CENTRAL, tables, [ids[centers[0]]])
    c1, c2 = centers
    color = q.shape.color_of(c1, c2)
    low, high = sorted((ids[c1], ids[c2]))
    return _serialize(CodeKind.BICENTRAL, tables, [color, low, high])


def canon_quotient(q: QuotientTree, root: Optional[int] = None) -> CanonicalCode:
    """
    Root at the loop vertex if there is a loop, else at the centers of the
    expanded tree (a central vertex, or both ends of the central edge as an
    unordered pair). An explicit root overrides both.
    """
    return _encode(q, root)


def code_of_normalized(normalized: Normalized) -> CanonicalCode:
    if normalized.case == NormalCase.SWAPPED:
        half = normalized.half
        q, qvertex = quotient_with_map(half.equipped)
        code = _encode(q, qvertex[half.root], extra=(half.central_color,))
    else:
        code = _encode(build_quotient(normalized.equipped), None)
    kind = CASE_KINDS[normalized.case]
    return CanonicalCode(bytes([VERSION, int(kind)]) + code.data[2:])


def canonical_code(et: EquippedColoredTree) -> CanonicalCode:
    """Equal codes if and only if the equipped trees are isomorphic"""
    return code_of_normalized(normalize(et))
