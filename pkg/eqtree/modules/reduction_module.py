import logging

from eqtree.automorphism import EquippedColoredTree, NormalCase, normalize
from eqtree.canonical import canon_quotient
from eqtree.modules.canon_module import iso_decide, necessary_conditions
from eqtree.modules.iso_module import IsoModule
from eqtree.planar_reduction import recover_quotient, reduce_to_graph
from eqtree.quotient import QuotientTree, build_quotient

logger = logging.getLogger(__name__)


def iso_via_reduction(q1: QuotientTree, q2: QuotientTree) -> bool:
    """
    Reduce both quotients to simple graphs, read the quotients back from the
    bare graphs and compare their canonical codes.
    """
    recovered = [
        recover_quotient(reduce_to_graph(q).without_provenance(), q.k) for q in (q1, q2)
    ]
    first, second = recovered
    if sorted(first.weight) != sorted(second.weight):
        return False
    return canon_quotient(first) == canon_quotient(second)


class ReductionModule(IsoModule):
    def decide(self, et1: EquippedColoredTree, et2: EquippedColoredTree) -> bool:
        if not necessary_conditions(et1, et2):
            return False
        first, second = normalize(et1), normalize(et2)
        if first.case != second.case:
            return False
        if first.case == NormalCase.SWAPPED:
            # the swapped central edge leaves a loop the reduction does not take
            logger.debug("reduction: swapped centers, canonical path")
            return iso_decide(et1, et2)
        return iso_via_reduction(
            build_quotient(first.equipped), build_quotient(second.equipped)
        )

    def get_name(self):
        return "Planar reduction and recovery"
