from abc import ABC, abstractmethod
from typing import Optional

from eqtree.automorphism import EquippedColoredTree


class IsoModule(ABC):
    """
    Abstract class for deciding isomorphism of equipped colored trees
    """

    # largest vertex count the method accepts, None for no limit
    max_vertices: Optional[int] = None

    def supports(self, et1: EquippedColoredTree, et2: EquippedColoredTree) -> bool:
        if self.max_vertices is None:
            return True
        return max(et1.n, et2.n) <= self.max_vertices

    def close(self):
        pass

    @abstractmethod
    def decide(self, et1: EquippedColoredTree, et2: EquippedColoredTree) -> bool:
        """True iff some color-preserving isomorphism conjugates the automorphisms"""
        pass

    @abstractmethod
    def get_name(self):
        """Get name of the module"""
        pass
