import logging

from eqtree.automorphism import EquippedColoredTree, NormalCase, cycle_type, normalize
from eqtree.canonical import code_of_normalized
from eqtree.modules.iso_module import IsoModule

logger = logging.getLogger(__name__)


def necessary_conditions(et1: EquippedColoredTree, et2: EquippedColoredTree) -> bool:
    """Vertex count, color multiset and cycle type of P all agree"""
    if et1.n != et2.n:
        return False
    if et1.tree.color_counts() != et2.tree.color_counts():
        return False
    return cycle_type(et1) == cycle_type(et2)


def iso_decide(et1: EquippedColoredTree, et2: EquippedColoredTree) -> bool:
    if not necessary_conditions(et1, et2):
        logger.debug("iso: necessary conditions differ")
        return False

    first, second = normalize(et1), normalize(et2)
    if first.case != second.case:
        logger.debug("iso: cases %s and %s", first.case.value, second.case.value)
        return False
    if first.case == NormalCase.SWAPPED:
        if first.half.central_color != second.half.central_color:
            return False

    return code_of_normalized(first) == code_of_normalized(second)


class CanonModule(IsoModule):
    def decide(self, et1: EquippedColoredTree, et2: EquippedColoredTree) -> bool:
        return iso_decide(et1, et2)

    def get_name(self):
        return "Canonical quotient code"
