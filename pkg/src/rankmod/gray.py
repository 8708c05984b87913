"""Rank-modulation codes from binary codes through the Gray map.

A binary word of length m = sum_{i=2}^{n} floor(log2 i) is cut into blocks
x_2 | x_3 | ... | x_n with |x_i| = floor(log2 i). Block x_i is read as a
reflected-binary Gray word and converted to an integer in [0, i-1], which
becomes inversion-vector coordinate i-1. Bits are big-endian within blocks.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .codes.base import BlockCode
from .perm import InversionVector, Permutation, from_inversion_vector, to_inversion_vector


def gray_map(u: int, s: int) -> tuple[int, ...]:
    """Reflected binary Gray image of u as s bits, most significant first."""
    if s < 0 or not 0 <= u < 2**s:
        raise ValueError(f"{u} does not fit in {s} bits")
    g = u ^ (u >> 1)
    return tuple((g >> j) & 1 for j in range(s - 1, -1, -1))


def inverse_gray(bits: Sequence[int]) -> int:
    u = 0
    for b in bits:
        u = (u << 1) | ((u & 1) ^ int(b))
    return u


@dataclass(frozen=True)
class GrayLayout:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")

    @cached_property
    def block_lengths(self) -> tuple[int, ...]:
        """m_i = floor(log2 i) for i = 2..n."""
        return tuple(i.bit_length() - 1 for i in range(2, self.n + 1))

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, pos = [], 0
        for mi in self.block_lengths:
            out.append(pos)
            pos += mi
        return tuple(out)

    @property
    def m(self) -> int:
        return sum(self.block_lengths)

    @staticmethod
    def closed_form(n: int) -> int:
        mn = n.bit_length() - 1
        return (n + 1) * mn - 2 ** (mn + 1) + 2


def psi_assemble(x: Sequence[int], layout: GrayLayout) -> InversionVector:
    if len(x) != layout.m:
        raise ValueError(f"expected {layout.m} bits, got {len(x)}")
    coords = [
        inverse_gray(x[off:off + mi])
        for off, mi in zip(layout.offsets, layout.block_lengths)
    ]
    return InversionVector(coords)


def gray_image(v: InversionVector, layout: GrayLayout) -> tuple[int, ...]:
    """Clip each coordinate to its block's range and Gray-map it back to bits."""
    if v.n != layout.n:
        raise ValueError(f"inversion vector for n={v.n}, layout for n={layout.n}")
    bits: list[int] = []
    for x, mi in zip(v.coords, layout.block_lengths):
        bits.extend(gray_map(min(x, 2**mi - 1), mi))
    return tuple(bits)


def reflection_lower_bound(dh: int, n: int) -> float:
    """Lower bound on d1(Psi(x), Psi(y)) for words at Hamming distance dh."""
    if dh < 0 or n < 2:
        raise ValueError("need dh >= 0 and n >= 2")
    return (n - 1) / 2 * (2 ** (dh / (n - 1)) - 1)


class GrayCodec:
    construction = "II"

    def __init__(self, n: int, seed: BlockCode):
        self.layout = GrayLayout(n)
        self.n = n
        if seed.q != 2:
            raise ValueError("seed code must be binary")
        if seed.length != self.layout.m:
            raise ValueError(f"seed length {seed.length} != m = {self.layout.m} for n={n}")
        self.seed = seed

    @property
    def radius(self) -> int:
        return self.seed.decoding_radius

    @property
    def size_bits(self):
        return self.seed.descriptor.dimension_bits

    def config(self) -> dict:
        return {"construction": "II", "n": self.n, "seed": self.seed.descriptor.to_json()}

    def descriptor(self) -> dict:
        d = self.seed.descriptor
        return {**self.config(), "m": self.layout.m, "log2M": d.dimension_bits,
                "d": d.design_distance, "radius": self.radius}

    def encode_word(self, word: Sequence[int]) -> Permutation:
        return from_inversion_vector(psi_assemble(word, self.layout))

    def encode(self, message: Sequence[int]) -> Permutation:
        return self.encode_word(self.seed.encode(message))

    def decode(self, received: Permutation) -> Optional[tuple[int, ...]]:
        if received.n != self.n:
            raise ValueError(f"expected a permutation of {self.n}, got {received.n}")
        y = gray_image(to_inversion_vector(received), self.layout)
        out = self.seed.decode_bounded(y)
        return out.message if out.ok else None

    def decode_permutation(self, received: Permutation) -> Optional[Permutation]:
        message = self.decode(received)
        return None if message is None else self.encode(message)

    def random_message(self, rng):
        return self.seed.random_message(rng)

    def all_messages(self):
        return itertools.product(range(2), repeat=self.seed.dimension)


def gray_encode(codec: GrayCodec, message: Sequence[int]) -> Permutation:
    return codec.encode(message)


def gray_decode(codec: GrayCodec, received: Permutation) -> Optional[tuple[int, ...]]:
    return codec.decode(received)
