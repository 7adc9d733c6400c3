import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple, Union

import numpy as np

from eqtree.automorphism import (
    EquippedColoredTree,
    HalfTree,
    NormalCase,
    conjugate,
    double_swapped,
    normalize,
    validate_automorphism,
)
from eqtree.canonical import canonical_code
from eqtree.colored_tree import Mode, validate_tree
from eqtree.errors import ColorOutOfRange, InfeasibleSpec, ParameterError, WrongMode
from eqtree.modules.brute_force_module import DEFAULT_LIMIT, iso_brute
from eqtree.modules.canon_module import necessary_conditions
from eqtree.quotient import QuotientTree, expand_with_blocks, make_quotient, quotient_with_map

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 20


@dataclass(frozen=True)
class GenSpec:
    n: int
    k: int = 3
    max_orbit: int = 6
    seed: int = 0
    # chance of a swapped central edge; needs an even n
    loop_probability: float = 0.0
    mode: Mode = Mode.GENERIC


class PairKind(Enum):
    ISO = "iso"
    NONISO = "noniso"


def _check_spec(spec: GenSpec):
    if spec.n < 1:
        raise InfeasibleSpec(f"n must be positive, got {spec.n}", nearest=1)
    if spec.k < 1:
        raise ColorOutOfRange(f"k must be positive, got {spec.k}", "k")
    if spec.mode == Mode.MORSE_SMALE and spec.k != 2:
        raise WrongMode(f"morse-smale mode requires k=2, got k={spec.k}", "k")
    if spec.seed < 0:
        raise ParameterError(f"seed must be non-negative, got {spec.seed}", "seed")
    if spec.max_orbit < 1:
        raise ParameterError(f"max_orbit must be positive, got {spec.max_orbit}", "max_orbit")
    if not 0.0 <= spec.loop_probability <= 1.0:
        raise ParameterError(
            f"loop_probability {spec.loop_probability} is outside [0, 1]", "loop_probability"
        )


def gen_quotient(
    spec: GenSpec, rng: np.random.Generator, n: Optional[int] = None
) -> QuotientTree:
    """Random quotient with total weight n (default spec.n); vertex 0 is the weight-1 root"""
    target = spec.n if n is None else n
    weights = [1]
    edges = []
    remaining = target - 1
    while remaining > 0:
        parent = int(rng.integers(len(weights)))
        if weights[parent] > remaining:
            parent = 0
        base = weights[parent]
        factor = int(rng.integers(1, min(spec.max_orbit, remaining) // base + 1))
        color = int(rng.integers(1, spec.k + 1))
        weights.append(base * factor)
        edges.append((parent, len(weights) - 1, color))
        remaining -= base * factor
    return make_quotient(len(weights), weights, edges, spec.k)


def with_mode(et: EquippedColoredTree, mode: Mode) -> EquippedColoredTree:
    if et.tree.mode == mode:
        return et
    tree = validate_tree(et.n, et.tree.edges, et.tree.k, mode)
    return validate_automorphism(tree, et.perm)


def random_relabel(et: EquippedColoredTree, rng: np.random.Generator) -> EquippedColoredTree:
    return conjugate(et, rng.permutation(et.n).tolist())


def _expand_swapped(q: QuotientTree, root: int, central_color: int) -> EquippedColoredTree:
    half, start = expand_with_blocks(q)
    return double_swapped(
        HalfTree(
            equipped=half,
            root=start[root],
            central_color=central_color,
            original=tuple(range(half.n)),
        )
    )


def gen_equipped(spec: GenSpec) -> EquippedColoredTree:
    _check_spec(spec)
    rng = np.random.default_rng(spec.seed)

    swapped = spec.loop_probability > 0 and rng.random() < spec.loop_probability
    if swapped and spec.n % 2 == 1:
        if spec.loop_probability >= 1.0:
            nearest = spec.n - 1 if spec.n > 1 else spec.n + 1
            raise InfeasibleSpec(
                f"a swapped central edge needs an even n, got {spec.n}", nearest=nearest
            )
        swapped = False

    if swapped:
        q = gen_quotient(spec, rng, spec.n // 2)
        et = _expand_swapped(q, 0, int(rng.integers(1, spec.k + 1)))
    else:
        q = gen_quotient(spec, rng)
        et = expand_with_blocks(q)[0]

    et = random_relabel(with_mode(et, spec.mode), rng)
    logger.info(
        "generated n=%d with %d orbits%s", et.n, q.m, " (swapped)" if swapped else ""
    )
    return et


@dataclass
class _Recipe:
    """Quotient an instance is rebuilt from, rooted at a weight-1 vertex"""

    weights: List[int]
    edges: List[List[int]]
    k: int
    root: int
    # color of the swapped central edge, None when the centers are fixed
    central_color: Optional[int] = None

    def build(self, mode: Mode) -> EquippedColoredTree:
        q = make_quotient(len(self.weights), self.weights, self.edges, self.k)
        if self.central_color is None:
            et = expand_with_blocks(q)[0]
        else:
            et = _expand_swapped(q, self.root, self.central_color)
        return with_mode(et, mode)

    def neighbours(self, a: int) -> List[int]:
        return [v if u == a else u for u, v, _ in self.edges if a in (u, v)]

    def leaves(self) -> List[int]:
        return [a for a in range(len(self.weights)) if a != self.root and len(self.neighbours(a)) == 1]


def _recipe(et: EquippedColoredTree) -> _Recipe:
    normalized = normalize(et)
    if normalized.case == NormalCase.SWAPPED:
        half = normalized.half
        q, qvertex = quotient_with_map(half.equipped)
        root, central_color = qvertex[half.root], half.central_color
    else:
        q, qvertex = quotient_with_map(et)
        root, central_color = qvertex[et.ranks.centers[0]], None
    return _Recipe(
        weights=list(q.weight),
        edges=[list(edge) for edge in q.qedges],
        k=q.k,
        root=root,
        central_color=central_color,
    )


def _recolor(recipe: _Recipe, rng: np.random.Generator) -> Optional[str]:
    if recipe.k < 2:
        return None
    targets = len(recipe.edges) + (recipe.central_color is not None)
    if targets == 0:
        return None
    index = int(rng.integers(targets))
    old = recipe.edges[index][2] if index < len(recipe.edges) else recipe.central_color
    new = int(rng.choice([c for c in range(1, recipe.k + 1) if c != old]))
    if index < len(recipe.edges):
        recipe.edges[index][2] = new
        return f"recolor edge {index}: {old} -> {new}"
    recipe.central_color = new
    return f"recolor central edge: {old} -> {new}"


def _reweight(recipe: _Recipe, rng: np.random.Generator) -> Optional[str]:
    leaves = recipe.leaves()
    if not leaves:
        return None
    a = int(rng.choice(leaves))
    parent = recipe.neighbours(a)[0]
    base = recipe.weights[parent]
    factors = [f for f in range(1, 4) if base * f != recipe.weights[a]]
    new = base * int(rng.choice(factors))
    old, recipe.weights[a] = recipe.weights[a], new
    return f"reweight leaf {a}: {old} -> {new}"


def _reattach(recipe: _Recipe, rng: np.random.Generator) -> Optional[str]:
    leaves = recipe.leaves()
    if not leaves:
        return None
    a = int(rng.choice(leaves))
    parent = recipe.neighbours(a)[0]
    parents = [
        b
        for b in range(len(recipe.weights))
        if b not in (a, parent) and recipe.weights[a] % recipe.weights[b] == 0
    ]
    if not parents:
        return None
    b = int(rng.choice(parents))
    for edge in recipe.edges:
        if a in edge[:2]:
            edge[0], edge[1] = b, a
    return f"reattach leaf {a}: {parent} -> {b}"


def _attach(recipe: _Recipe, rng: np.random.Generator) -> str:
    b = int(rng.integers(len(recipe.weights)))
    color = int(rng.integers(1, recipe.k + 1))
    recipe.weights.append(recipe.weights[b])
    recipe.edges.append([b, len(recipe.weights) - 1, color])
    return f"attach leaf of weight {recipe.weights[b]} to {b}"


MUTATIONS = (_recolor, _reweight, _reattach)


def _distinct(et: EquippedColoredTree, mutated: EquippedColoredTree) -> bool:
    if max(et.n, mutated.n) <= DEFAULT_LIMIT:
        return iso_brute(et, mutated) is None
    if not necessary_conditions(et, mutated):
        return True
    return canonical_code(et) != canonical_code(mutated)


def make_pair(
    et: EquippedColoredTree, kind: Union[PairKind, str], seed: int
) -> Tuple[EquippedColoredTree, EquippedColoredTree, bool]:
    """
    iso: a random relabeling with the conjugated permutation.
    noniso: one random mutation of the quotient (recolor an edge orbit,
    reweight a leaf orbit or reattach it), checked to be non-isomorphic.
    """
    kind = PairKind(kind)
    if seed < 0:
        raise ParameterError(f"seed must be non-negative, got {seed}", "seed")
    rng = np.random.default_rng(seed)
    if kind == PairKind.ISO:
        return et, random_relabel(et, rng), True

    mode = et.tree.mode
    for attempt in range(MAX_ATTEMPTS):
        recipe = _recipe(et)
        mutation = MUTATIONS[int(rng.integers(len(MUTATIONS)))](recipe, rng)
        if mutation is None:
            continue
        mutated = recipe.build(mode)
        if _distinct(et, mutated):
            logger.debug("noniso pair after %d attempts: %s", attempt + 1, mutation)
            return et, random_relabel(mutated, rng), False
        logger.debug("mutation gave an isomorphic instance: %s", mutation)

    recipe = _recipe(et)
    mutation = _attach(recipe, rng)
    logger.debug("noniso pair by fallback: %s", mutation)
    return et, random_relabel(recipe.build(mode), rng), False
