"""Product codes A (x) B with iterated row/column bounded-distance decoding.

A codeword is an n_b x n_a array, serialized row-major, whose rows lie in A
and whose columns lie in B. The message is the leading k_b x k_a block.

Row-then-column decoding always succeeds when at most t_b rows carry more
than t_a errors, which holds for every pattern of weight below
(t_a + 1)(t_b + 1). That number minus one is the decoder's guaranteed radius;
the design radius floor((d_a d_b - 1)/2) is reported alongside but not promised.
"""
from __future__ import annotations

from .base import BlockCode, BlockCodeDescriptor, DecodeOutcome, hamming_distance

DEFAULT_ITERATIONS = 4


class ProductCode(BlockCode):
    def __init__(self, a: BlockCode, b: BlockCode, max_iterations: int = DEFAULT_ITERATIONS):
        if a.q != b.q:
            raise ValueError(f"alphabet mismatch: {a.q} != {b.q}")
        if max_iterations < 1:
            raise ValueError("need at least one decoding iteration")
        self.a, self.b = a, b
        self.q = a.q
        self.length = a.length * b.length
        self.dimension = a.dimension * b.dimension
        self.max_iterations = max_iterations

    @property
    def descriptor(self):
        da, db = self.a.descriptor, self.b.descriptor
        radius = (da.decoding_radius + 1) * (db.decoding_radius + 1) - 1
        d = da.design_distance * db.design_distance
        return BlockCodeDescriptor(
            "product", self.q, self.length, self.dimension, d, min(radius, (d - 1) // 2),
            {"a": da.to_json(), "b": db.to_json(), "max_iterations": self.max_iterations},
        )

    def _rows(self, word):
        na = self.a.length
        return [list(word[r * na:(r + 1) * na]) for r in range(self.b.length)]

    def encode(self, message):
        message = self._check_message(message)
        ka, kb = self.a.dimension, self.b.dimension
        top = [self.a.encode(message[r * ka:(r + 1) * ka]) for r in range(kb)]
        cols = [self.b.encode([row[c] for row in top]) for c in range(self.a.length)]
        return tuple(cols[c][r] for r in range(self.b.length) for c in range(self.a.length))

    def is_codeword(self, word):
        word = tuple(word)
        if len(word) != self.length:
            return False
        rows = self._rows(word)
        return all(self.a.is_codeword(r) for r in rows) and all(
            self.b.is_codeword([r[c] for r in rows]) for c in range(self.a.length)
        )

    def decode_bounded(self, word):
        word = self._check_word(word)
        rows = self._rows(word)
        na, nb = self.a.length, self.b.length
        for _ in range(self.max_iterations):
            for r in range(nb):
                if not self.a.is_codeword(rows[r]):
                    out = self.a.decode_bounded(rows[r])
                    if out.ok:
                        rows[r] = list(out.codeword)
            clean = True
            for c in range(na):
                col = [rows[r][c] for r in range(nb)]
                if not self.b.is_codeword(col):
                    out = self.b.decode_bounded(col)
                    if out.ok:
                        for r in range(nb):
                            rows[r][c] = out.codeword[r]
                    else:
                        clean = False
            if clean and all(self.a.is_codeword(r) for r in rows):
                break
        candidate = tuple(s for row in rows for s in row)
        if not self.is_codeword(candidate):
            return DecodeOutcome.failure()
        if hamming_distance(candidate, word) > self.decoding_radius:
            return DecodeOutcome.failure()
        ka, kb = self.a.dimension, self.b.dimension
        message = tuple(rows[r][c] for r in range(kb) for c in range(ka))
        return DecodeOutcome(message, candidate)


def product_code(a: BlockCode, b: BlockCode, max_iterations: int = DEFAULT_ITERATIONS) -> ProductCode:
    return ProductCode(a, b, max_iterations)
