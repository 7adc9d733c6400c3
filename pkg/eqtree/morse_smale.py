# domains joined by saddle spheres; P is the action of the diffeomorphism

from dataclasses import dataclass
from typing import List, Tuple

from eqtree.automorphism import EquippedColoredTree
from eqtree.colored_tree import COLOR_NAMES, Mode
from eqtree.errors import WrongMode
from eqtree.quotient import build_dynamics_quotient


@dataclass(frozen=True)
class SaddleOrbit:
    color: str
    period: int
    edges: Tuple[Tuple[int, int], ...]
    negative_orientation: bool = False


@dataclass(frozen=True)
class MorseSmaleReport:
    saddle_count: int
    domain_count: int
    saddle_orbits: Tuple[SaddleOrbit, ...]
    domain_periods: Tuple[int, ...]
    # least m with f^m acting trivially on the domains
    period: int = 1

    @property
    def negative_orientation_saddles(self) -> int:
        return sum(1 for orbit in self.saddle_orbits if orbit.negative_orientation)

    def to_dict(self):
        return {
            "k_f": self.saddle_count,
            "domains": self.domain_count,
            "saddle_orbits": [
                {
                    "color": orbit.color,
                    "period": orbit.period,
                    "edges": [list(edge) for edge in orbit.edges],
                    "negative_orientation": orbit.negative_orientation,
                }
                for orbit in self.saddle_orbits
            ],
            "saddle_orbit_count": len(self.saddle_orbits),
            "negative_orientation_saddles": self.negative_orientation_saddles,
            "domain_periods": list(self.domain_periods),
            "period": self.period,
        }


def ms_report(et: EquippedColoredTree) -> MorseSmaleReport:
    if et.tree.mode != Mode.MORSE_SMALE:
        raise WrongMode("the dynamics report needs a morse-smale instance", "mode")

    tree = et.tree
    quotient = build_dynamics_quotient(et)
    swapped_edge = None
    if quotient.loop is not None:
        swapped_edge = et.ranks.central_edge

    seen = [False] * len(tree.edges)
    orbits: List[SaddleOrbit] = []
    for index, (u, v, color) in enumerate(tree.edges):
        if seen[index]:
            continue
        members = []
        a, b = u, v
        while True:
            member = tree.edge_index(a, b)
            if seen[member]:
                break
            seen[member] = True
            members.append((min(a, b), max(a, b)))
            a, b = et.perm(a), et.perm(b)
        negative = swapped_edge is not None and members[0] == swapped_edge
        orbits.append(
            SaddleOrbit(
                color=COLOR_NAMES[color],
                period=len(members),
                edges=tuple(members),
                negative_orientation=negative,
            )
        )

    return MorseSmaleReport(
        saddle_count=len(tree.edges),
        domain_count=tree.n,
        saddle_orbits=tuple(orbits),
        domain_periods=et.orbits.sizes,
        period=int(et.perm.as_sympy.order()),
    )
