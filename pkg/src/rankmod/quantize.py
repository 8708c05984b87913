"""Rank-modulation codes for many errors, built by quantizing inversion vectors.

IIIA takes a binary seed of length n-1: bit i becomes coordinate x_i in {0, i},
and the decoder thresholds x_i at floor(i/2).

IIIB takes a q-ary seed of length 2(l-1)(q-1) over symbols 0..q-1. The seed
word is prefixed with 3(q-1)-1 zero symbols; coordinate i in band k
(2k-1)(q-1) <= i < (2k+1)(q-1), k = 2..l, carries symbol s as (2k-1)s, and the
leading dead zone always carries 0.
"""
from __future__ import annotations

import itertools
from typing import Optional, Sequence

from .codes.base import BlockCode
from .perm import InversionVector, Permutation, from_inversion_vector, to_inversion_vector


def radius_iiia(t: int) -> int:
    """Kendall radius of a IIIA code from a t-error seed: t^2/4 (even t), (t^2-1)/4 (odd t)."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return t * t // 4


def radius_iiib(t: int, q: int) -> int:
    """Kendall radius (t+1-(q-1)s)(s+1) - 1 with s = floor((t+1)/(2(q-1)))."""
    if t < 0 or q < 2:
        raise ValueError("need t >= 0 and q >= 2")
    s = (t + 1) // (2 * (q - 1))
    return (t + 1 - (q - 1) * s) * (s + 1) - 1


class _QuantCodec:
    seed: BlockCode
    n: int

    @property
    def size_bits(self):
        return self.seed.descriptor.dimension_bits

    def random_message(self, rng):
        return self.seed.random_message(rng)

    def all_messages(self):
        return itertools.product(range(self.seed.q), repeat=self.seed.dimension)

    def encode(self, message: Sequence[int]) -> Permutation:
        return self.encode_word(self.seed.encode(message))

    def decode(self, received: Permutation) -> Optional[tuple[int, ...]]:
        if received.n != self.n:
            raise ValueError(f"expected a permutation of {self.n}, got {received.n}")
        out = self.seed.decode_bounded(self.quantize(to_inversion_vector(received)))
        return out.message if out.ok else None

    def decode_permutation(self, received: Permutation) -> Optional[Permutation]:
        message = self.decode(received)
        return None if message is None else self.encode(message)


class QuantACodec(_QuantCodec):
    construction = "IIIA"

    def __init__(self, seed: BlockCode):
        if seed.q != 2:
            raise ValueError("IIIA needs a binary seed")
        self.seed = seed
        self.n = seed.length + 1

    @property
    def radius(self) -> int:
        return radius_iiia(self.seed.decoding_radius)

    def config(self) -> dict:
        return {"construction": "IIIA", "n": self.n, "seed": self.seed.descriptor.to_json()}

    def descriptor(self) -> dict:
        d = self.seed.descriptor
        return {**self.config(), "log2M": d.dimension_bits, "d": 2 * radius_iiia(d.corrector_radius) + 1,
                "radius": self.radius}

    def theta(self, word: Sequence[int]) -> InversionVector:
        return InversionVector(i if b else 0 for i, b in enumerate(word, start=1))

    def encode_word(self, word: Sequence[int]) -> Permutation:
        return from_inversion_vector(self.theta(word))

    def quantize(self, v: InversionVector) -> tuple[int, ...]:
        return tuple(int(x > i // 2) for i, x in enumerate(v.coords, start=1))


class QuantBCodec(_QuantCodec):
    construction = "IIIB"

    def __init__(self, q: int, l: int, seed: BlockCode):
        if l < 2:
            raise ValueError("band parameter l must be >= 2")
        if seed.q != q:
            raise ValueError(f"seed alphabet {seed.q} != q = {q}")
        if seed.length != 2 * (l - 1) * (q - 1):
            raise ValueError(f"seed length {seed.length} != 2(l-1)(q-1) = {2 * (l - 1) * (q - 1)}")
        self.q, self.l, self.seed = q, l, seed
        self.n = (2 * l + 1) * (q - 1)
        self.dead = 3 * (q - 1) - 1
        # band index k for coordinate i (1-based); 0 in the dead zone
        self._band = [0] * self.dead + [
            (i // (q - 1) + 1) // 2 for i in range(3 * (q - 1), self.n)
        ]

    @property
    def radius(self) -> int:
        return radius_iiib(self.seed.decoding_radius, self.q)

    def config(self) -> dict:
        return {"construction": "IIIB", "q": self.q, "l": self.l, "seed": self.seed.descriptor.to_json()}

    def descriptor(self) -> dict:
        d = self.seed.descriptor
        return {**self.config(), "n": self.n, "log2M": d.dimension_bits,
                "d": 2 * radius_iiib(d.corrector_radius, self.q) + 1, "radius": self.radius}

    def band(self, i: int) -> int:
        return self._band[i - 1]

    def theta(self, word: Sequence[int]) -> InversionVector:
        if len(word) != self.seed.length:
            raise ValueError(f"expected {self.seed.length} symbols, got {len(word)}")
        full = (0,) * self.dead + tuple(word)
        return InversionVector((2 * k - 1) * s if k else 0 for k, s in zip(self._band, full))

    def encode_word(self, word: Sequence[int]) -> Permutation:
        return from_inversion_vector(self.theta(word))

    def quantize_coord(self, k: int, x: int) -> int:
        """Symbol for value x in band k; shared bin edges go to the smaller symbol."""
        w = 2 * k - 1
        s = max(0, -(-(x - k) // w))
        return min(s, self.q - 1)

    def quantize(self, v: InversionVector) -> tuple[int, ...]:
        return tuple(
            self.quantize_coord(k, x) for k, x in zip(self._band[self.dead:], v.coords[self.dead:])
        )
