import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Optional, Tuple

from eqtree.automorphism import EquippedColoredTree
from eqtree.modules.brute_force_module import DEFAULT_LIMIT, BruteForceModule
from eqtree.modules.canon_module import CanonModule
from eqtree.modules.iso_module import IsoModule
from eqtree.modules.reduction_module import ReductionModule

logger = logging.getLogger(__name__)


class IsoMethods(Enum):
    CANON = "canon"
    BRUTE = "brute"
    REDUCTION = "reduction"


def log_screen_file(text):
    print(text)
    logger.log(logging.INFO, text)


@dataclass
class Agreement:
    pairs: int = 0
    # per method: pairs decided, decisions that differ from the expected answer
    decided: Dict[IsoMethods, int] = field(default_factory=lambda: defaultdict(int))
    wrong: Dict[IsoMethods, int] = field(default_factory=lambda: defaultdict(int))
    skipped: Dict[IsoMethods, int] = field(default_factory=lambda: defaultdict(int))

    @property
    def perfect(self) -> bool:
        return not any(self.wrong.values())


class Evaluator:
    def __init__(self, methods: Optional[Iterable[IsoMethods]] = None, brute_limit=DEFAULT_LIMIT):
        self.used_methods = set(methods) if methods else set(IsoMethods)
        self.brute_limit = brute_limit
        self.evaluators = self._construct_evaluators()

    def _construct_evaluators(self) -> Dict[IsoMethods, IsoModule]:
        construction_map = {
            IsoMethods.CANON: CanonModule,
            IsoMethods.BRUTE: lambda: BruteForceModule(self.brute_limit),
            IsoMethods.REDUCTION: ReductionModule,
        }
        return {
            method: constructor()
            for method, constructor in construction_map.items()
            if method in self.used_methods
        }

    def decide(
        self,
        et1: EquippedColoredTree,
        et2: EquippedColoredTree,
        method: IsoMethods = IsoMethods.CANON,
    ) -> bool:
        return self.evaluators[method].decide(et1, et2)

    def compare(
        self, pairs: Iterable[Tuple[EquippedColoredTree, EquippedColoredTree, bool]]
    ) -> Agreement:
        """Run every method on (et1, et2, expected) pairs and count disagreements"""
        agreement = Agreement()
        for et1, et2, expected in pairs:
            agreement.pairs += 1
            for method, evaluator in self.evaluators.items():
                if not evaluator.supports(et1, et2):
                    agreement.skipped[method] += 1
                    continue
                agreement.decided[method] += 1
                if evaluator.decide(et1, et2) != expected:
                    agreement.wrong[method] += 1
                    logger.warning(
                        "%s disagrees on a pair of %d vertices (expected %s)",
                        evaluator.get_name(),
                        et1.n,
                        expected,
                    )

        for method, evaluator in self.evaluators.items():
            log_screen_file(
                f"method: {evaluator.get_name()}\t pairs: {agreement.decided[method]}"
                f"\t wrong: {agreement.wrong[method]}\t skipped: {agreement.skipped[method]}"
            )
        return agreement

    def close(self):
        for evaluator in self.evaluators.values():
            evaluator.close()
