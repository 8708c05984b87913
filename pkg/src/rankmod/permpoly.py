"""Rank-modulation codes from linearized permutation polynomials.

Over F_q with n = q - 1, symbol i in [n] stands for alpha^(i-1). A codeword is
(L(1), L(alpha), ..., L(alpha^(q-2))) for a linearized permutation polynomial
L of degree <= p^nu, nu = floor(log_p(n - 2t - 1)). Prefix sums (the
accumulator) turn each adjacent transposition into a single symbol error,
and the prefix-summed codeword is L evaluated at b_i = 1 + alpha + ... + alpha^i,
so a generalized RS decoder over those points recovers L.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .codes.grs import GRSCode
from .gf import ENUMERATION_CAP, Field, enumerate_perm_linearized, gf
from .perm import Permutation


def log_floor(x: int, p: int) -> int:
    """Largest nu with p**nu <= x (x >= 1)."""
    if x < 1:
        raise ValueError("log_floor needs x >= 1")
    nu = 0
    while p ** (nu + 1) <= x:
        nu += 1
    return nu


def pp_parameters(p: int, m: int, t: int) -> tuple[int, int, int]:
    """(n, log2 of the guaranteed size, 2t+1) without building the codebook."""
    q = p**m
    n = q - 1
    if n - 2 * t - 1 < 1:
        raise ValueError(f"t={t} too large for q={q}")
    nu = log_floor(n - 2 * t - 1, p)
    bits = nu * m * math.log2(p)
    return n, int(bits) if bits.is_integer() else bits, 2 * t + 1


def accumulate(field: Field, values: Sequence[int]) -> list[int]:
    """Prefix sums z_i = v_1 + ... + v_i in the field."""
    out, acc = [], 0
    for v in values:
        acc = field.add(acc, v)
        out.append(acc)
    return out


def unaccumulate(field: Field, sums: Sequence[int]) -> list[int]:
    """Inverse of :func:`accumulate`: v_1 = z_1, v_i = z_i - z_(i-1)."""
    out, prev = [], 0
    for z in sums:
        out.append(field.sub(z, prev))
        prev = z
    return out


@dataclass(frozen=True)
class PPConfig:
    p: int
    m: int
    t: int

    def to_json(self) -> dict:
        return {"construction": "I", "p": self.p, "m": self.m, "t": self.t}


class PPCodec:
    """Codebook = all linearized permutation polynomials of degree <= p^nu, in canonical order."""

    construction = "I"

    def __init__(self, p: int, m: int, t: int, cap: int = ENUMERATION_CAP):
        self.field = gf(p, m)
        self.p, self.m, self.t = p, m, t
        self.q = self.field.q
        self.n = self.q - 1
        if t < 0 or self.n - 2 * t - 1 < 1:
            raise ValueError(f"need n - 2t - 1 >= 1 (n={self.n}, t={t})")
        self.nu = log_floor(self.n - 2 * t - 1, p)
        self.codebook = enumerate_perm_linearized(self.field, self.nu, cap)
        self._keys = [c.coeffs[::-1] for c in self.codebook]
        if len(self.codebook) < self.q**self.nu:
            raise AssertionError("codebook smaller than the q^nu guarantee")

        F = self.field
        self.points = [F.exp(i) for i in range(self.n)]
        self.betas = accumulate(F, self.points)
        if len(set(self.betas)) != self.n:
            raise AssertionError("accumulated evaluation points must be distinct")
        self.grs = GRSCode(F, self.betas, self.n - 2 * t)

    @property
    def radius(self) -> int:
        return self.t

    @property
    def size(self) -> int:
        return len(self.codebook)

    def config(self) -> dict:
        return PPConfig(self.p, self.m, self.t).to_json()

    def descriptor(self) -> dict:
        return {
            **self.config(),
            "n": self.n,
            "nu": self.nu,
            "codebook_size": self.size,
            "d": 2 * self.t + 1,
            "radius": self.t,
            "seed": self.grs.descriptor.to_json(),
        }

    # symbol i <-> alpha^(i-1)
    def to_field(self, sigma: Permutation) -> list[int]:
        return [self.field.exp(v - 1) for v in sigma.entries]

    def from_field(self, values: Sequence[int]) -> Permutation:
        return Permutation(self.field.log(v) + 1 for v in values)

    def encode(self, index: int) -> Permutation:
        if not 0 <= index < self.size:
            raise IndexError(f"message index {index} outside [0, {self.size})")
        L = self.codebook[index]
        return self.from_field([L(a) for a in self.points])

    def index_of(self, coeffs: Sequence[int]) -> Optional[int]:
        key = tuple(coeffs)[::-1]
        i = bisect.bisect_left(self._keys, key)
        return i if i < len(self._keys) and self._keys[i] == key else None

    def decode(self, received: Permutation) -> Optional[int]:
        if received.n != self.n:
            raise ValueError(f"expected a permutation of {self.n}, got {received.n}")
        z = accumulate(self.field, self.to_field(received))
        out = self.grs.decode_poly(z)
        if out is None:
            return None
        f, y = out
        coeffs = self._linearized_coeffs(f)
        if coeffs is None:
            return None
        sigma = unaccumulate(self.field, y)
        if 0 in sigma or len(set(sigma)) != self.n:
            return None
        return self.index_of(coeffs)

    def _linearized_coeffs(self, f: Sequence[int]) -> Optional[tuple[int, ...]]:
        powers = {self.p**i: i for i in range(self.nu + 1)}
        coeffs = [0] * (self.nu + 1)
        for deg, c in enumerate(f):
            if c == 0:
                continue
            if deg not in powers:
                return None
            coeffs[powers[deg]] = c
        return tuple(coeffs)

    def random_message(self, rng) -> int:
        return int(rng.integers(0, self.size))

    def all_messages(self):
        return range(self.size)


def pp_encode(codec: PPCodec, message_index: int) -> Permutation:
    return codec.encode(message_index)


def pp_decode(codec: PPCodec, received: Permutation) -> Optional[int]:
    return codec.decode(received)


def codebook_export(codec: PPCodec) -> list[list[int]]:
    return [list(L.coeffs) for L in codec.codebook]
