import sys
import time
from dataclasses import dataclass

import numpy as np

from eqtree.canonical import canonical_code
from eqtree.evaluator import Evaluator, log_screen_file
from eqtree.generator import GenSpec, PairKind, gen_equipped, make_pair, random_relabel

pairs = int(sys.argv[1]) if len(sys.argv) > 1 else 5000
seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0


@dataclass
class Tally:
    total: int = 0
    agreed: int = 0

    @property
    def rate(self) -> float:
        if self.total == 0:
            return 0.0
        return self.agreed / self.total


rng = np.random.default_rng(seed)


def sample_pairs(count):
    for i in range(count):
        spec = GenSpec(
            n=int(rng.integers(1, 10)),
            k=int(rng.integers(1, 4)),
            max_orbit=int(rng.integers(1, 5)),
            seed=int(rng.integers(2**32)),
            loop_probability=0.3,
        )
        et = gen_equipped(spec)
        kind = PairKind.ISO if i % 2 == 0 else PairKind.NONISO
        yield make_pair(et, kind, int(rng.integers(2**32)))


print(f"\nOracle agreement on {pairs} pairs, n <= 9, k <= 3")
evaluator = Evaluator()
start = time.perf_counter()
agreement = evaluator.compare(sample_pairs(pairs))
elapsed = time.perf_counter() - start
log_screen_file(f"pairs: {agreement.pairs}\t perfect: {agreement.perfect}\t seconds: {elapsed:.1f}")
evaluator.close()

print("\nRelabel invariance, 1000 instances x 100 relabelings")
relabel = Tally()
for i in range(1000):
    et = gen_equipped(GenSpec(n=int(rng.integers(1, 200)), seed=i, loop_probability=0.2))
    code = canonical_code(et)
    for _ in range(100):
        relabel.total += 1
        if canonical_code(random_relabel(et, rng)) == code:
            relabel.agreed += 1
log_screen_file(f"relabelings: {relabel.total}\t identical codes: {relabel.rate:.4f}")
