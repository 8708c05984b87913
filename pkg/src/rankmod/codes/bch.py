"""Binary primitive narrow-sense BCH codes.

Codewords are bit tuples, most significant first: position j holds the
coefficient of x^(n-1-j). Encoding is systematic (message bits lead).
Decoding is syndromes -> Berlekamp-Massey -> Chien search.
"""
from __future__ import annotations

import numpy as np

from ..gf import Field, gf
from .base import BlockCode, BlockCodeDescriptor, DecodeOutcome, shorten


def cyclotomic_coset(s: int, n: int) -> frozenset[int]:
    out, k = set(), s % n
    while k not in out:
        out.add(k)
        k = (2 * k) % n
    return frozenset(out)


def _gf2_mod(a: int, g: int) -> int:
    dg = g.bit_length()
    while a.bit_length() >= dg:
        a ^= g << (a.bit_length() - dg)
    return a


class BCHCode(BlockCode):
    def __init__(self, ext_degree: int, t: int):
        if ext_degree < 2:
            raise ValueError("extension degree must be >= 2")
        n = 2**ext_degree - 1
        if not 0 <= t or 2 * t + 1 > n:
            raise ValueError(f"t={t} outside the BCH design range for length {n}")
        self.field: Field = gf(2, ext_degree)
        self.ext_degree = ext_degree
        self.requested_t = t
        self.q = 2
        self.length = n

        zeros: set[int] = set()
        for s in range(1, 2 * t + 1):
            zeros |= cyclotomic_coset(s, n)
        run = 0
        while (run + 1) in zeros:
            run += 1
        self.zeros = frozenset(zeros)
        # consecutive zeros alpha^1..alpha^run give distance >= run + 1
        self.design_distance = run + 1 if zeros else 1
        self.t = (self.design_distance - 1) // 2

        F = self.field
        gen = F.poly_from_roots(F.exp(z) for z in sorted(zeros))
        if any(c not in (0, 1) for c in gen):
            raise AssertionError("generator polynomial must be binary")
        self.generator = sum(c << i for i, c in enumerate(gen))
        self.redundancy = self.generator.bit_length() - 1
        self.dimension = n - self.redundancy
        if self.dimension < 1:
            raise ValueError(f"t={t} leaves no message bits")

        N = n
        self._exp = np.asarray(F._exp[:N], dtype=np.int64)
        self._log = np.asarray(F._log, dtype=np.int64)
        self._syn_rows = np.arange(1, 2 * self.t + 1, dtype=np.int64)[:, None]

    @property
    def descriptor(self) -> BlockCodeDescriptor:
        return BlockCodeDescriptor(
            "bch", 2, self.length, self.dimension, self.design_distance, self.t,
            {"ext_degree": self.ext_degree, "requested_t": self.requested_t},
        )

    def encode(self, message):
        message = self._check_message(message)
        m = int("".join(map(str, message)), 2) if message else 0
        shifted = m << self.redundancy
        c = shifted | _gf2_mod(shifted, self.generator)
        return tuple(int(b) for b in format(c, f"0{self.length}b"))

    def is_codeword(self, word):
        word = tuple(word)
        if len(word) != self.length:
            return False
        return _gf2_mod(int("".join(map(str, word)), 2), self.generator) == 0

    def _syndromes(self, word) -> np.ndarray:
        bits = np.asarray(word, dtype=np.int64)
        expo = (self.length - 1) - np.flatnonzero(bits)
        if expo.size == 0:
            return np.zeros(2 * self.t, dtype=np.int64)
        vals = self._exp[(self._syn_rows * expo[None, :]) % self.length]
        return np.bitwise_xor.reduce(vals, axis=1)

    def _berlekamp_massey(self, syn) -> list[int]:
        F = self.field
        C, B = [1], [1]
        L, m, b = 0, 1, 1
        for r in range(len(syn)):
            d = int(syn[r])
            for i in range(1, L + 1):
                if i < len(C):
                    d ^= F.mul(C[i], int(syn[r - i]))
            if d == 0:
                m += 1
                continue
            coef = F.div(d, b)
            T = list(C)
            shifted = [0] * m + [F.mul(coef, x) for x in B]
            if len(shifted) > len(C):
                C = C + [0] * (len(shifted) - len(C))
            for i, x in enumerate(shifted):
                C[i] ^= x
            if 2 * L <= r:
                L, B, b, m = r + 1 - L, T, d, 1
            else:
                m += 1
        C = F.poly_trim(C)
        return C if len(C) - 1 == L else []

    def decode_bounded(self, word):
        word = self._check_word(word)
        if self.t == 0:
            return DecodeOutcome(word[: self.dimension], word) if self.is_codeword(word) else DecodeOutcome.failure()
        syn = self._syndromes(word)
        if not syn.any():
            return DecodeOutcome(word[: self.dimension], word)
        locator = self._berlekamp_massey(syn)
        nerr = len(locator) - 1
        if nerr < 1 or nerr > self.t:
            return DecodeOutcome.failure()
        # Chien search: exponent e is in error iff locator(alpha^-e) == 0
        N = self.length
        e = np.arange(N, dtype=np.int64)
        acc = np.zeros(N, dtype=np.int64)
        for k, c in enumerate(locator):
            if c:
                acc ^= self._exp[(self._log[c] - k * e) % N]
        err_exp = np.flatnonzero(acc == 0)
        if err_exp.size != nerr:
            return DecodeOutcome.failure()
        fixed = list(word)
        for ex in err_exp:
            fixed[N - 1 - int(ex)] ^= 1
        if self._syndromes(fixed).any():
            return DecodeOutcome.failure()
        return self._accept(word, fixed)


def make_bch(ext_degree: int, t: int, shorten_by: int = 0) -> BlockCode:
    """Binary primitive BCH code of length 2^ext_degree - 1, shortened by ``shorten_by``."""
    n = 2**ext_degree - 1
    if n - shorten_by < 1 or shorten_by < 0:
        raise ValueError(f"cannot shorten length {n} by {shorten_by}")
    if t == 0:
        from .linear import full_space

        return full_space(2, n - shorten_by)
    return shorten(BCHCode(ext_degree, t), shorten_by)


def bch_for_length(length: int, t: int) -> BlockCode:
    """Shortest primitive BCH code covering ``length``, shortened down to it."""
    e = max(2, length.bit_length())
    return make_bch(e, t, 2**e - 1 - length)


def design_dimension(ext_degree: int, t: int, length: int) -> int:
    """The redundancy guarantee length - ext_degree*t for a t-error BCH code."""
    return length - ext_degree * t
