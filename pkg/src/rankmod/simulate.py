"""Seeded Kendall-channel simulation and brute-force codebook verification.

Every trial owns its generator: ``numpy.random.default_rng([seed, trial])``
(PCG64 seeded through SeedSequence with entropy [seed, trial]). Reports are
therefore identical whether trials run serially or in any parallel split.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .perm import (
    BFS_MAX_N,
    KendallChannelConfig,
    Permutation,
    apply_kendall_errors,
    bfs_kendall_distance,
    kendall_distance,
)

RNG_NAME = "numpy.PCG64 via SeedSequence([seed, trial])"
MAX_PAIRWISE = 2**16
MAX_ORACLE_N = 7


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial])


@dataclass
class SimReport:
    descriptor: dict
    trials: int
    injected_errors: int
    failures: int = 0
    miscorrections: int = 0
    radius: int = 0
    seed: int = 0
    rng: str = RNG_NAME
    wall_time: Optional[float] = None

    def __post_init__(self):
        if self.failures + self.miscorrections > self.trials:
            raise ValueError("failures + miscorrections exceed the number of trials")

    @property
    def within_radius(self) -> bool:
        return self.injected_errors <= self.radius

    @property
    def violation(self) -> bool:
        """Within the guaranteed radius every trial must decode correctly."""
        return self.within_radius and (self.failures or self.miscorrections) > 0

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "codec": self.descriptor,
            "trials": self.trials,
            "injected_errors": self.injected_errors,
            "radius": self.radius,
            "failures": self.failures,
            "miscorrections": self.miscorrections,
            "seed": self.seed,
            "rng": self.rng,
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out


def run_trial(codec, errors: int, rng: np.random.Generator) -> str:
    """One encode/corrupt/decode round: 'ok', 'failure' or 'miscorrection'."""
    message = codec.random_message(rng)
    sent = codec.encode(message)
    received = apply_kendall_errors(sent, KendallChannelConfig(errors), rng)
    decoded = codec.decode(received)
    if decoded is None:
        return "failure"
    return "ok" if decoded == message else "miscorrection"


def run_simulation(codec, trials: int, errors: int, seed: int = 0,
                   trial_ids: Optional[Iterable[int]] = None) -> SimReport:
    if trials < 0 or errors < 0:
        raise ValueError("trials and errors must be nonnegative")
    report = SimReport(codec.descriptor(), trials, errors, radius=codec.radius, seed=seed)
    start = time.perf_counter()
    ids = range(trials) if trial_ids is None else trial_ids
    for trial in ids:
        outcome = run_trial(codec, errors, trial_rng(seed, trial))
        if outcome == "failure":
            report.failures += 1
        elif outcome == "miscorrection":
            report.miscorrections += 1
    report.wall_time = time.perf_counter() - start
    return report


def merge_reports(parts: Sequence[SimReport]) -> SimReport:
    """Combine reports for disjoint trial-id sets of the same experiment."""
    first = parts[0]
    return SimReport(
        first.descriptor,
        sum(p.trials for p in parts),
        first.injected_errors,
        sum(p.failures for p in parts),
        sum(p.miscorrections for p in parts),
        first.radius,
        first.seed,
        wall_time=sum(p.wall_time or 0.0 for p in parts),
    )


def codebook_size(codec) -> int:
    if codec.construction == "I":
        return codec.size
    return codec.seed.q**codec.seed.dimension


def codebook(codec, limit: int = MAX_PAIRWISE) -> list[Permutation]:
    if codebook_size(codec) > limit:
        raise ValueError(f"codebook has {codebook_size(codec)} words, limit {limit}")
    return [codec.encode(m) for m in codec.all_messages()]


def _sign_matrix(words: Sequence[Permutation]) -> np.ndarray:
    """Row r, column (a, b): +1 if value a precedes value b in word r, else -1."""
    n = words[0].n
    pos = np.empty((len(words), n), dtype=np.int64)
    for r, w in enumerate(words):
        pos[r, np.asarray(w.entries) - 1] = np.arange(n)
    a, b = np.triu_indices(n, 1)
    return np.where(pos[:, a] < pos[:, b], 1, -1).astype(np.int32)


def min_pairwise_kendall(words: Sequence[Permutation], chunk: int = 1024) -> int:
    """Exact minimum Kendall distance over all pairs, by counting discordant value pairs.

    d(u, v) = (C(n,2) - <s_u, s_v>) / 2 where s is the +/-1 order-sign vector.
    """
    if len(words) < 2:
        raise ValueError("need at least two codewords")
    if len(set(words)) != len(words):
        return 0
    S = _sign_matrix(words)
    pairs = S.shape[1]
    best = pairs
    for lo in range(0, len(words), chunk):
        block = S[lo:lo + chunk] @ S[lo:].T
        block = (pairs - block) // 2
        # only pairs (i, j) with j > i
        mask = np.triu(np.ones(block.shape, dtype=bool), 1)
        if mask.any():
            best = min(best, int(block[mask].min()))
    return best


@dataclass
class VerifyReport:
    mode: str
    codewords: int
    measured_distance: Optional[int] = None
    design_distance: Optional[int] = None
    pairs_checked: int = 0
    mismatches: int = 0
    details: dict = field(default_factory=dict)

    @property
    def violation(self) -> bool:
        if self.mode == "exhaustive-distance":
            return self.measured_distance < self.design_distance
        return self.mismatches > 0

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "codewords": self.codewords,
            "measured_distance": self.measured_distance,
            "design_distance": self.design_distance,
            "pairs_checked": self.pairs_checked,
            "mismatches": self.mismatches,
            "ok": not self.violation,
            **self.details,
        }


def verify_distance(codec, limit: int = MAX_PAIRWISE) -> VerifyReport:
    words = codebook(codec, limit)
    d = min_pairwise_kendall(words)
    return VerifyReport(
        "exhaustive-distance", len(words), d, codec.descriptor()["d"],
        pairs_checked=len(words) * (len(words) - 1) // 2,
        details={"codec": codec.descriptor()},
    )


def verify_oracle(codec, max_pairs: int = 2000) -> VerifyReport:
    """Compare kendall_distance with breadth-first search on codeword pairs (n <= 7)."""
    if codec.n > MAX_ORACLE_N:
        raise ValueError(f"BFS oracle limited to n <= {MAX_ORACLE_N}, got n={codec.n}")
    assert MAX_ORACLE_N <= BFS_MAX_N
    words = codebook(codec)
    checked = mismatches = 0
    best = None
    for u, v in itertools.islice(itertools.combinations(words, 2), max_pairs):
        fast, slow = kendall_distance(u, v), bfs_kendall_distance(u, v)
        checked += 1
        mismatches += fast != slow
        best = slow if best is None else min(best, slow)
    return VerifyReport(
        "oracle-distance", len(words), best, codec.descriptor()["d"],
        pairs_checked=checked, mismatches=mismatches,
        details={"codec": codec.descriptor(), "scope": f"first {checked} codeword pairs"},
    )
