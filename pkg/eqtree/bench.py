import logging
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from eqtree.automorphism import EquippedColoredTree, VertexPermutation
from eqtree.errors import ParameterError
from eqtree.evaluator import log_screen_file
from eqtree.generator import GenSpec, PairKind, gen_equipped, make_pair
from eqtree.modules.canon_module import iso_decide

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("size", "trials", "mean_ns", "p50_ns", "p95_ns")


@dataclass(frozen=True)
class BenchRow:
    size: int
    trials: int
    mean_ns: float
    p50_ns: float
    p95_ns: float

    def to_csv(self) -> str:
        return f"{self.size},{self.trials},{self.mean_ns:.0f},{self.p50_ns:.0f},{self.p95_ns:.0f}"


@dataclass(frozen=True)
class BenchReport:
    rows: Tuple[BenchRow, ...]
    slope: Optional[float] = None
    intercept: Optional[float] = None
    r_squared: Optional[float] = None

    def csv_lines(self) -> List[str]:
        return [",".join(CSV_COLUMNS)] + [row.to_csv() for row in self.rows]

    def summary(self) -> str:
        if self.slope is None:
            return f"fit: n/a ({len(self.rows)} size)"
        return f"fit: slope={self.slope:.4f} intercept={self.intercept:.4f} r2={self.r_squared:.4f}"


def trial_seeds(seed: int, size: int, trial: int) -> Tuple[int, int]:
    """(instance seed, relabel seed) of one trial"""
    state = np.random.SeedSequence([seed, size, trial]).generate_state(2)
    return int(state[0]), int(state[1])


def trial_pair(
    seed: int, size: int, trial: int, k: int = 3, max_orbit: int = 6
) -> Tuple[EquippedColoredTree, EquippedColoredTree]:
    instance_seed, relabel_seed = trial_seeds(seed, size, trial)
    et = gen_equipped(GenSpec(n=size, k=k, max_orbit=max_orbit, seed=instance_seed))
    first, second, _ = make_pair(et, PairKind.ISO, relabel_seed)
    return first, second


def _fresh(et: EquippedColoredTree) -> EquippedColoredTree:
    # drop cached ranks, orbits and cycles so every timed call does the full work
    return EquippedColoredTree(et.tree, VertexPermutation(et.perm.image))


def fit_loglog(sizes: Sequence[int], times: Sequence[float]) -> Tuple[float, float, float]:
    x = np.log(np.asarray(sizes, dtype=float))
    y = np.log(np.asarray(times, dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    total = float(np.sum((y - y.mean()) ** 2))
    r_squared = 1.0 - float(np.sum(residual**2)) / total if total > 0 else 1.0
    return float(slope), float(intercept), r_squared


def bench(
    sizes: Sequence[int],
    trials: int,
    seed: int,
    k: int = 3,
    max_orbit: int = 6,
    warmup: int = 1,
) -> BenchReport:
    if not sizes or any(size < 1 for size in sizes) or list(sizes) != sorted(sizes):
        raise ParameterError(f"sizes must be positive and ascending, got {list(sizes)}", "sizes")
    if trials < 1:
        raise ParameterError(f"trials must be positive, got {trials}", "trials")
    if seed < 0:
        raise ParameterError(f"seed must be non-negative, got {seed}", "seed")
    rows = []
    for size in sizes:
        timings = []
        for trial in range(trials):
            first, second = trial_pair(seed, size, trial, k, max_orbit)
            for _ in range(warmup):
                iso_decide(_fresh(first), _fresh(second))
            a, b = _fresh(first), _fresh(second)
            start = time.perf_counter_ns()
            decision = iso_decide(a, b)
            timings.append(time.perf_counter_ns() - start)
            if not decision:
                logger.warning("size %d trial %d: isomorphic pair decided false", size, trial)
        row = BenchRow(
            size=size,
            trials=trials,
            mean_ns=float(np.mean(timings)),
            p50_ns=float(np.percentile(timings, 50)),
            p95_ns=float(np.percentile(timings, 95)),
        )
        logger.info("bench: %s", row.to_csv())
        rows.append(row)

    if len({row.size for row in rows}) < 2:
        return BenchReport(rows=tuple(rows))
    slope, intercept, r_squared = fit_loglog(
        [row.size for row in rows], [row.mean_ns for row in rows]
    )
    return BenchReport(tuple(rows), slope, intercept, r_squared)


def print_report(report: BenchReport):
    for line in report.csv_lines():
        log_screen_file(line)
    log_screen_file(report.summary())
