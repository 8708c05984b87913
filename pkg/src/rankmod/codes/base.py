from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Optional, Sequence


@dataclass(frozen=True)
class BlockCodeDescriptor:
    """Parameters of a q-ary block code.

    ``corrector_radius`` is the design radius floor((d-1)/2); ``decoding_radius``
    is what the shipped decoder guarantees. They differ only for codes whose
    decoder falls short of the design distance (product codes).
    """

    family: str
    q: int
    length: int
    dimension: int
    design_distance: int
    decoding_radius: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 1 <= self.design_distance <= max(self.length, 1):
            raise ValueError(f"design distance {self.design_distance} outside [1, {self.length}]")
        if self.decoding_radius > self.corrector_radius:
            raise ValueError("decoder cannot promise more than the design radius")

    @property
    def corrector_radius(self) -> int:
        return (self.design_distance - 1) // 2

    @property
    def dimension_bits(self) -> float:
        bits = self.dimension * math.log2(self.q)
        return int(bits) if bits.is_integer() else bits

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "q": self.q,
            "n": self.length,
            "k": self.dimension,
            "k_bits": self.dimension_bits,
            "d": self.design_distance,
            "t": self.corrector_radius,
            "decoding_radius": self.decoding_radius,
        }
        out.update(self.params)
        return out


@dataclass(frozen=True)
class DecodeOutcome:
    message: Optional[tuple[int, ...]] = None
    codeword: Optional[tuple[int, ...]] = None

    @property
    def ok(self) -> bool:
        return self.codeword is not None

    @classmethod
    def failure(cls) -> "DecodeOutcome":
        return cls()


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    return sum(x != y for x, y in zip(a, b))


class BlockCode(ABC):
    """A q-ary code of length ``length`` with ``q**dimension`` codewords.

    Every family here is systematic with the message in the leading
    ``dimension`` positions; shortening and product codes rely on that.
    """

    q: int
    length: int
    dimension: int

    @property
    @abstractmethod
    def descriptor(self) -> BlockCodeDescriptor: ...

    @property
    def decoding_radius(self) -> int:
        return self.descriptor.decoding_radius

    @abstractmethod
    def encode(self, message: Sequence[int]) -> tuple[int, ...]: ...

    @abstractmethod
    def decode_bounded(self, word: Sequence[int]) -> DecodeOutcome:
        """Return the codeword within ``decoding_radius`` of ``word`` or a failure."""

    def is_codeword(self, word: Sequence[int]) -> bool:
        word = tuple(word)
        return len(word) == self.length and self.encode(word[: self.dimension]) == word

    def _check_message(self, message: Sequence[int]) -> tuple[int, ...]:
        message = tuple(int(s) for s in message)
        if len(message) != self.dimension:
            raise ValueError(f"message length {len(message)} != dimension {self.dimension}")
        if any(not 0 <= s < self.q for s in message):
            raise ValueError(f"message symbols must lie in [0, {self.q - 1}]")
        return message

    def _check_word(self, word: Sequence[int]) -> tuple[int, ...]:
        word = tuple(int(s) for s in word)
        if len(word) != self.length:
            raise ValueError(f"word length {len(word)} != code length {self.length}")
        if any(not 0 <= s < self.q for s in word):
            raise ValueError(f"word symbols must lie in [0, {self.q - 1}]")
        return word

    def _accept(self, word: Sequence[int], codeword: Sequence[int]) -> DecodeOutcome:
        codeword = tuple(codeword)
        if hamming_distance(word, codeword) > self.decoding_radius:
            return DecodeOutcome.failure()
        return DecodeOutcome(codeword[: self.dimension], codeword)

    def random_message(self, rng) -> tuple[int, ...]:
        return tuple(int(v) for v in rng.integers(0, self.q, size=self.dimension))


class ShortenedCode(BlockCode):
    """Fix the first ``count`` message symbols to zero and delete them."""

    def __init__(self, parent: BlockCode, count: int):
        if not 0 <= count < parent.dimension:
            raise ValueError(f"cannot shorten a dimension-{parent.dimension} code by {count}")
        self.parent = parent
        self.count = count
        self.q = parent.q
        self.length = parent.length - count
        self.dimension = parent.dimension - count

    @property
    def descriptor(self) -> BlockCodeDescriptor:
        pd = self.parent.descriptor
        return BlockCodeDescriptor(
            "shortened", self.q, self.length, self.dimension,
            pd.design_distance, pd.decoding_radius,
            {"shorten_by": self.count, "base": pd.to_json()},
        )

    def encode(self, message):
        message = self._check_message(message)
        return self.parent.encode((0,) * self.count + message)[self.count:]

    def decode_bounded(self, word):
        word = self._check_word(word)
        out = self.parent.decode_bounded((0,) * self.count + word)
        if not out.ok or any(out.codeword[: self.count]):
            return DecodeOutcome.failure()
        return self._accept(word, out.codeword[self.count:])

    def is_codeword(self, word):
        return self.parent.is_codeword((0,) * self.count + tuple(word))


def shorten(code: BlockCode, count: int) -> BlockCode:
    return code if count == 0 else ShortenedCode(code, count)
