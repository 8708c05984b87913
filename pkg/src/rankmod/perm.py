"""Permutations of [n], the Kendall tau metric and inversion vectors.

Permutations are stored in one-line notation with 1-based values, so
``Permutation((3, 1, 4, 2))`` sends 1 -> 3, 2 -> 1, 3 -> 4, 4 -> 2.
Products follow the right-action convention: ``compose(sigma, pi)`` is the
permutation ``i -> sigma(pi(i))``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

BFS_MAX_N = 8


@dataclass(frozen=True)
class Permutation:
    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        entries = tuple(int(v) for v in entries)
        if not entries:
            raise ValueError("a permutation needs at least one entry")
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"not a permutation of 1..{len(entries)}: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, i: int) -> int:
        return self.entries[i - 1]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def to_json(self) -> dict:
        return {"n": self.n, "perm": list(self.entries)}

    @classmethod
    def from_json(cls, obj) -> "Permutation":
        """Accepts {"n": .., "perm": [...]} or a bare list of entries."""
        if isinstance(obj, list):
            return cls(obj)
        perm = cls(obj["perm"])
        if "n" in obj and obj["n"] != perm.n:
            raise ValueError(f"n={obj['n']} does not match {perm.n} entries")
        return perm


@dataclass(frozen=True)
class InversionVector:
    """Coordinates x(1), ..., x(n-1) with 0 <= x(i) <= i."""

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        coords = tuple(int(v) for v in coords)
        for i, x in enumerate(coords, start=1):
            if not 0 <= x <= i:
                raise ValueError(f"coordinate x({i})={x} outside [0, {i}]")
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return len(self.coords) + 1

    def __getitem__(self, i: int) -> int:
        """1-based access, matching the x(i) indexing."""
        return self.coords[i - 1]

    def __len__(self) -> int:
        return len(self.coords)

    def to_json(self) -> dict:
        return {"n": self.n, "invvec": list(self.coords)}

    @classmethod
    def from_json(cls, obj: dict) -> "InversionVector":
        vec = cls(obj["invvec"])
        if "n" in obj and obj["n"] != vec.n:
            raise ValueError(f"n={obj['n']} does not match {vec.n - 1} coordinates")
        return vec


@dataclass(frozen=True)
class KendallChannelConfig:
    error_count: int
    seed: int = 0

    def __post_init__(self):
        if self.error_count < 0:
            raise ValueError("error_count must be nonnegative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def check(self, n: int) -> None:
        if self.error_count > n * (n - 1) // 2:
            raise ValueError(
                f"{self.error_count} errors exceed the diameter {n * (n - 1) // 2} of S_{n}"
            )


def _same_n(a, b) -> None:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} != {b.n}")


def compose(sigma: Permutation, pi: Permutation) -> Permutation:
    """The product pi*sigma acting on the right: i -> sigma(pi(i))."""
    _same_n(sigma, pi)
    s = sigma.entries
    return Permutation(s[j - 1] for j in pi.entries)


def invert(sigma: Permutation) -> Permutation:
    inv = [0] * sigma.n
    for pos, v in enumerate(sigma.entries, start=1):
        inv[v - 1] = pos
    return Permutation(inv)


def _positions(sigma: Permutation) -> np.ndarray:
    # pos[v - 1] = 0-based location of value v
    pos = np.empty(sigma.n, dtype=np.int64)
    pos[np.asarray(sigma.entries, dtype=np.int64) - 1] = np.arange(sigma.n)
    return pos


def to_inversion_vector(sigma: Permutation) -> InversionVector:
    """x(i) = number of j < i+1 located after i+1 in sigma."""
    pos = _positions(sigma)
    later = pos[None, :] > pos[:, None]  # later[v, j]: value j+1 sits after value v+1
    counts = np.tril(later, -1).sum(axis=1)
    return InversionVector(counts[1:].tolist())


def from_inversion_vector(x: InversionVector) -> Permutation:
    # Insert values 1..n in turn; value i+1 goes x(i) places from the end.
    line = [1]
    for i, xi in enumerate(x.coords, start=1):
        line.insert(len(line) - xi, i + 1)
    return Permutation(line)


def inversion_count(sigma: Permutation) -> int:
    return sum(to_inversion_vector(sigma).coords)


def kendall_distance(sigma: Permutation, pi: Permutation) -> int:
    """Minimum number of adjacent transpositions taking sigma to pi."""
    _same_n(sigma, pi)
    return inversion_count(compose(invert(sigma), pi))


def l1_distance(x: InversionVector, y: InversionVector) -> int:
    _same_n(x, y)
    return sum(abs(a - b) for a, b in zip(x.coords, y.coords))


def adjacent_swap(sigma: Permutation, j: int) -> Permutation:
    """Exchange the entries at locations j and j+1 (1-based)."""
    if not 1 <= j < sigma.n:
        raise ValueError(f"swap location {j} outside [1, {sigma.n - 1}]")
    e = list(sigma.entries)
    e[j - 1], e[j] = e[j], e[j - 1]
    return Permutation(e)


def apply_kendall_errors(
    sigma: Permutation,
    cfg: KendallChannelConfig,
    rng: Optional[np.random.Generator] = None,
) -> Permutation:
    """Apply ``cfg.error_count`` uniformly drawn adjacent transpositions in sequence.

    Locations are drawn with replacement, so consecutive swaps can cancel and
    the realized Kendall distance may be smaller than the error count. Without
    an explicit ``rng`` the draws come from ``numpy.random.default_rng(cfg.seed)``.
    """
    cfg.check(sigma.n)
    if cfg.error_count == 0 or sigma.n == 1:
        return sigma
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    e = list(sigma.entries)
    for j in rng.integers(0, sigma.n - 1, size=cfg.error_count):
        e[j], e[j + 1] = e[j + 1], e[j]
    return Permutation(e)


def _neighbours(state: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for j in range(len(state) - 1):
        nxt = list(state)
        nxt[j], nxt[j + 1] = nxt[j + 1], nxt[j]
        yield tuple(nxt)


def bfs_kendall_distance(sigma: Permutation, pi: Permutation) -> int:
    """Graph distance in the adjacent-transposition Cayley graph of S_n.

    Bidirectional breadth-first search; exists as an independent check on
    :func:`kendall_distance` and refuses n > 8.
    """
    _same_n(sigma, pi)
    if sigma.n > BFS_MAX_N:
        raise ValueError(f"n={sigma.n} too large for exhaustive search (max {BFS_MAX_N})")
    src, dst = sigma.entries, pi.entries
    if src == dst:
        return 0
    dist = [{src: 0}, {dst: 0}]
    frontier = [[src], [dst]]
    while frontier[0] and frontier[1]:
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        seen, other = dist[side], dist[1 - side]
        nxt = []
        best = None
        for state in frontier[side]:
            d = seen[state] + 1
            for nb in _neighbours(state):
                if nb in other:
                    total = d + other[nb]
                    best = total if best is None else min(best, total)
                if nb not in seen:
                    seen[nb] = d
                    nxt.append(nb)
        if best is not None:
            return best
        frontier[side] = nxt
    raise AssertionError("Cayley graph of S_n is connected")


def kendall_ball(center: Permutation, radius: int) -> list[tuple[Permutation, int]]:
    """All permutations within Kendall distance ``radius`` of ``center`` (BFS order)."""
    start = center.entries
    dist = {start: 0}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        d = dist[state]
        if d == radius:
            continue
        for nb in _neighbours(state):
            if nb not in dist:
                dist[nb] = d + 1
                queue.append(nb)
    return [(Permutation(s), d) for s, d in dist.items()]


def all_permutations(n: int) -> Iterator[Permutation]:
    from itertools import permutations

    for p in permutations(range(1, n + 1)):
        yield Permutation(p)


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    return Permutation((rng.permutation(n) + 1).tolist())

