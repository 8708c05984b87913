"""Small linear codes given by a generator matrix, decoded by exhaustive search.

Meant for toy seeds (q**k up to a few tens of thousands) in tests and
verification runs.
"""
from __future__ import annotations

import itertools
from typing import Sequence

from ..gf import Field, gf_order
from .base import BlockCode, BlockCodeDescriptor, DecodeOutcome, hamming_distance

MAX_CODEWORDS = 2**16


class FullSpace(BlockCode):
    """The whole space GF(q)^n: d = 1, nothing corrected."""

    def __init__(self, q: int, length: int):
        self.q, self.length, self.dimension = q, length, length

    @property
    def descriptor(self):
        return BlockCodeDescriptor("full", self.q, self.length, self.length, 1, 0)

    def encode(self, message):
        return self._check_message(message)

    def decode_bounded(self, word):
        word = self._check_word(word)
        return DecodeOutcome(word, word)

    def is_codeword(self, word):
        return len(word) == self.length


def full_space(q: int, length: int) -> FullSpace:
    return FullSpace(q, length)


class LinearCode(BlockCode):
    def __init__(self, field: Field, generator: Sequence[Sequence[int]], name: str = "linear"):
        rows = [list(r) for r in generator]
        if not rows or len({len(r) for r in rows}) != 1:
            raise ValueError("generator must be a nonempty rectangular matrix")
        self.field = field
        self.q = field.q
        self.dimension = len(rows)
        self.length = len(rows[0])
        self.name = name
        if self.q**self.dimension > MAX_CODEWORDS:
            raise ValueError(f"{self.q}^{self.dimension} codewords exceed brute-force limit")
        self.generator = self._systematic(rows)
        self.codewords = [self._mul(m) for m in itertools.product(range(self.q), repeat=self.dimension)]
        nonzero = [sum(1 for s in c if s) for c in self.codewords if any(c)]
        self.min_distance = min(nonzero) if nonzero else self.length
        self._index = {c: i for i, c in enumerate(self.codewords)}

    def _systematic(self, rows):
        F, k = self.field, self.dimension
        for col in range(k):
            pivot = next((r for r in range(col, k) if rows[r][col]), None)
            if pivot is None:
                raise ValueError("leading k columns of the generator are not independent")
            rows[col], rows[pivot] = rows[pivot], rows[col]
            inv = F.inv(rows[col][col])
            rows[col] = [F.mul(inv, v) for v in rows[col]]
            for r in range(k):
                if r != col and rows[r][col]:
                    c = rows[r][col]
                    rows[r] = [F.sub(a, F.mul(c, b)) for a, b in zip(rows[r], rows[col])]
        return [tuple(r) for r in rows]

    def _mul(self, message) -> tuple[int, ...]:
        F = self.field
        out = [0] * self.length
        for m, row in zip(message, self.generator):
            if m:
                out = [F.add(a, F.mul(m, g)) for a, g in zip(out, row)]
        return tuple(out)

    @property
    def descriptor(self):
        t = (self.min_distance - 1) // 2
        return BlockCodeDescriptor(self.name, self.q, self.length, self.dimension, self.min_distance, t)

    def encode(self, message):
        return self._mul(self._check_message(message))

    def is_codeword(self, word):
        return tuple(word) in self._index

    def decode_bounded(self, word):
        word = self._check_word(word)
        if word in self._index:
            return DecodeOutcome(word[: self.dimension], word)
        best = min(self.codewords, key=lambda c: hamming_distance(c, word))
        return self._accept(word, best)


def repetition_code(q: int, length: int) -> LinearCode:
    return LinearCode(gf_order(q), [[1] * length], name="repetition")
