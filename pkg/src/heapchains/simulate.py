"""Monte-Carlo estimation of chain-count scaling for random intervals.

Arrivals are random subintervals of (0, 1): each [a, b] takes one life from
the largest live particle with value at most a (starting a new chain when no
such particle exists) and then inserts b as a fresh particle with k lives.
Live particles coincide with the greedy algorithm's open slots, so per-seed
counts match ``greedy_partition_sequence`` exactly; sorting arrivals by
(right, left) before feeding the process gives the set variant.

Each trial derives its own generator from the root seed by a counter-based
spawn, so trial order never affects results.
"""

from __future__ import annotations

import csv
import math
import statistics
from dataclasses import dataclass

import numpy as np
from sortedcontainers import SortedList

from .poset import Interval, _check_arity

MODE_SEQUENCE = "seq"
MODE_SORTED_SET = "set"
_MODES = (MODE_SEQUENCE, MODE_SORTED_SET)


@dataclass(frozen=True)
class SimConfig:
    n: int
    k: int
    trials: int
    seed: int
    mode: str = MODE_SEQUENCE

    def __post_init__(self):
        _check_arity(self.k)
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")


@dataclass(frozen=True)
class SimStats:
    counts: tuple[int, ...]
    mean: float
    normalized: float
    stderr: float


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent generator for one trial, derived from the root seed."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))


def random_interval(rng: np.random.Generator) -> Interval:
    """One random subinterval of (0, 1): two uniform draws, sorted."""
    u, v = rng.random(2).tolist()
    return Interval(min(u, v), max(u, v))


def sample_intervals(rng: np.random.Generator, n: int) -> list[Interval]:
    """n random intervals, consuming the stream exactly like n random_interval calls."""
    return [Interval(min(u, v), max(u, v)) for u, v in _sample_pairs(rng, n)]


def _sample_pairs(rng: np.random.Generator, n: int) -> list[tuple[float, float]]:
    draws = rng.random(2 * n).tolist()
    return [
        (draws[2 * i], draws[2 * i + 1])
        if draws[2 * i] <= draws[2 * i + 1]
        else (draws[2 * i + 1], draws[2 * i])
        for i in range(n)
    ]


def _particle_process(pairs, k: int):
    values = SortedList()
    lives: dict[float, int] = {}
    count = 0
    for a, b in pairs:
        idx = values.bisect_right(a) - 1
        if idx < 0:
            count += 1
        else:
            v = values[idx]
            lives[v] -= 1
            if lives[v] == 0:
                del lives[v]
                values.pop(idx)
        if b in lives:
            lives[b] += k
        else:
            values.add(b)
            lives[b] = k
    return count, values, lives


def _chain_count(pairs, k: int) -> int:
    return _particle_process(pairs, k)[0]


def run_process(n: int, k: int, rng: np.random.Generator) -> tuple[int, tuple[float, ...]]:
    """Run the interval particle process on n random arrivals.

    Returns the number of new chains and the final live-particle multiset
    (each particle value repeated once per remaining life).
    """
    _check_arity(k)
    count, values, lives = _particle_process(_sample_pairs(rng, n), k)
    particles = tuple(v for v in values for _ in range(lives[v]))
    return count, particles


def normalized_count(count: float, n: int, k: int) -> float:
    """count/sqrt(n) at k=1, count/n for k >= 2."""
    if n == 0:
        return math.nan
    return count / math.sqrt(n) if k == 1 else count / n


def estimate_scaling(config: SimConfig) -> SimStats:
    """Independent seeded trials of the process; aggregates per-trial chain counts."""
    counts = []
    for trial in range(config.trials):
        rng = trial_rng(config.seed, trial)
        pairs = _sample_pairs(rng, config.n)
        if config.mode == MODE_SORTED_SET:
            pairs.sort(key=lambda p: (p[1], p[0]))
        counts.append(_chain_count(pairs, config.k))
    mean = statistics.fmean(counts)
    stderr = (
        statistics.stdev(counts) / math.sqrt(config.trials) if config.trials > 1 else 0.0
    )
    return SimStats(tuple(counts), mean, normalized_count(mean, config.n, config.k), stderr)


def write_trials_csv(path, config: SimConfig, stats: SimStats) -> None:
    """One row per trial: trial, n, k, mode, count, normalized."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["trial", "n", "k", "mode", "count", "normalized"])
        for trial, count in enumerate(stats.counts):
            writer.writerow(
                [
                    trial,
                    config.n,
                    config.k,
                    config.mode,
                    count,
                    repr(normalized_count(count, config.n, config.k)),
                ]
            )
