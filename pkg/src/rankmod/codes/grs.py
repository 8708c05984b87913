"""Generalized Reed-Solomon codes over arbitrary distinct evaluation points.

A codeword is (v_1 f(b_1), ..., v_n f(b_n)) for a polynomial f of degree < k.
Encoding is systematic: the first k symbols are the message. Decoding uses
Gao's algorithm (partial extended Euclid against prod (x - b_i)), which needs
no structure on the evaluation set.
"""
from __future__ import annotations

from typing import Optional, Sequence

from ..gf import Field, gf_order
from .base import BlockCode, BlockCodeDescriptor, DecodeOutcome, hamming_distance


class GRSCode(BlockCode):
    def __init__(
        self,
        field: Field,
        eval_points: Sequence[int],
        k: int,
        multipliers: Optional[Sequence[int]] = None,
    ):
        points = [int(b) for b in eval_points]
        if len(set(points)) != len(points):
            raise ValueError("evaluation points must be pairwise distinct")
        if not 1 <= k <= len(points):
            raise ValueError(f"dimension {k} outside [1, {len(points)}]")
        if multipliers is None:
            multipliers = [1] * len(points)
        if len(multipliers) != len(points) or any(v == 0 for v in multipliers):
            raise ValueError("column multipliers must be nonzero, one per point")
        self.field = field
        self.q = field.q
        self.points = tuple(points)
        self.multipliers = tuple(int(v) for v in multipliers)
        self.length = len(points)
        self.dimension = k
        self.t = (self.length - k) // 2

        F = self.field
        self._vanishing = F.poly_from_roots(points)
        # Lagrange basis over the first k points, evaluated everywhere
        head = points[:k]
        self._basis = []
        for r in range(k):
            others = head[:r] + head[r + 1:]
            num = F.poly_from_roots(others)
            denom = F.poly_eval(num, head[r])
            self._basis.append(F.poly_scale(num, F.inv(denom)))
        self._gen = [
            tuple(
                F.mul(F.div(self.multipliers[i], self.multipliers[r]), F.poly_eval(self._basis[r], b))
                for i, b in enumerate(points)
            )
            for r in range(k)
        ]

    @property
    def descriptor(self):
        d = self.length - self.dimension + 1
        return BlockCodeDescriptor(
            "grs", self.q, self.length, self.dimension, d, self.t,
            {"points": list(self.points)},
        )

    def message_poly(self, message: Sequence[int]) -> list[int]:
        F = self.field
        out: list[int] = []
        for r, m in enumerate(message):
            if m:
                out = F.poly_add(out, F.poly_scale(self._basis[r], F.div(m, self.multipliers[r])))
        return out

    def evaluate(self, poly: Sequence[int]) -> tuple[int, ...]:
        F = self.field
        return tuple(F.mul(v, F.poly_eval(poly, b)) for v, b in zip(self.multipliers, self.points))

    def encode(self, message):
        message = self._check_message(message)
        F = self.field
        out = [0] * self.length
        for m, row in zip(message, self._gen):
            if m:
                out = [F.add(a, F.mul(m, g)) for a, g in zip(out, row)]
        return tuple(out)

    def decode_poly(self, word: Sequence[int]) -> Optional[tuple[list[int], tuple[int, ...]]]:
        """Return (f, codeword) with codeword within t of ``word``, or None."""
        word = self._check_word(word)
        F = self.field
        n, k = self.length, self.dimension
        w = [F.div(s, v) for s, v in zip(word, self.multipliers)]
        g1 = F.interpolate(self.points, w)
        if len(g1) <= k:
            return g1, self.evaluate(g1)
        # partial extended Euclid: r_prev = g0, r = g1; u tracks the g1 cofactor
        r_prev, r = self._vanishing, g1
        u_prev, u = [], [1]
        stop = (n + k) / 2
        while r and len(r) - 1 >= stop:
            quo, rem = F.poly_divmod(r_prev, r)
            r_prev, r = r, rem
            u_prev, u = u, F.poly_sub(u_prev, F.poly_mul(quo, u))
        if not u:
            return None
        f, rem = F.poly_divmod(r, u)
        if rem or len(f) > k:
            return None
        codeword = self.evaluate(f)
        if hamming_distance(codeword, word) > self.t:
            return None
        return f, codeword

    def decode_bounded(self, word):
        word = self._check_word(word)
        if self.is_codeword(word):
            return DecodeOutcome(word[: self.dimension], word)
        out = self.decode_poly(word)
        if out is None:
            return DecodeOutcome.failure()
        return self._accept(word, out[1])


def make_grs(field: Field, eval_points: Sequence[int], k: int, multipliers=None) -> GRSCode:
    return GRSCode(field, eval_points, k, multipliers)


def reed_solomon(q: int, length: int, k: int) -> GRSCode:
    """RS code over GF(q) evaluated at alpha^0, ..., alpha^(length-1)."""
    F = gf_order(q)
    if length > q - 1:
        raise ValueError(f"length {length} exceeds q - 1 = {q - 1}")
    return GRSCode(F, [F.exp(i) for i in range(length)], k)
