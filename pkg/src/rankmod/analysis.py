"""Kendall sphere sizes, Hamming-type bounds, rates and parameter tables.

Bound arithmetic is exact (Python ints / Fractions); logarithms are taken
with mpmath at 96 bits of working precision and only turned into floats at
the end.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
import operator
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import mpmath

from .codes.bch import bch_for_length, design_dimension
from .codes.grs import reed_solomon
from .codes.product import product_code
from .gray import GrayLayout
from .permpoly import pp_parameters
from .quantize import radius_iiia, radius_iiib

MAX_SPHERE_N = 500
PRECISION_BITS = 96


@dataclass(frozen=True)
class SphereTable:
    n: int
    sizes: tuple[int, ...]

    @property
    def diameter(self) -> int:
        return len(self.sizes) - 1

    def __getitem__(self, i: int) -> int:
        return self.sizes[i]


def _inversion_poly(n: int, limit: Optional[int] = None) -> list[int]:
    """Coefficients of prod_{j<=n} (1 + x + ... + x^(j-1)), optionally cut after x^limit."""
    coeffs = [1]
    for j in range(2, n + 1):
        size = len(coeffs) + j - 1
        if limit is not None:
            size = min(size, limit + 1)
        # out[i] = coeffs[i-j+1] + ... + coeffs[i] = P[i+1] - P[i-j+1], P the prefix sums
        prefix = [0, *itertools.accumulate(coeffs)]
        upper = prefix[1:] + [prefix[-1]] * (j - 1)
        lower = [0] * (j - 1) + prefix
        coeffs = list(map(operator.sub, upper[:size], lower[:size]))
    return coeffs


@lru_cache(maxsize=256)
def sphere_sizes(n: int) -> SphereTable:
    """K_n(i) = #permutations of [n] with i inversions, from prod_j (1 + x + ... + x^(j-1))."""
    if not 1 <= n <= MAX_SPHERE_N:
        raise ValueError(f"n={n} outside [1, {MAX_SPHERE_N}]")
    return SphereTable(n, tuple(_inversion_poly(n)))


def sphere_head(n: int, count: int) -> tuple[int, ...]:
    """K_n(0), ..., K_n(count - 1) by the same product, truncated."""
    if n < 1 or count < 1:
        raise ValueError("need n >= 1 and count >= 1")
    return tuple(_inversion_poly(n, count - 1))


def sphere_closed_forms(n: int) -> tuple[int, int, int, int]:
    """K_n(0..3) from the closed formulas (valid for n >= 3)."""
    return 1, n - 1, (n * n - n - 2) // 2, math.comb(n + 1, 3) - n


def log2_exact(x: Fraction | int) -> float:
    with mpmath.workprec(PRECISION_BITS):
        x = Fraction(x)
        return float(mpmath.log(mpmath.mpf(x.numerator), 2) - mpmath.log(mpmath.mpf(x.denominator), 2))


# running sums log2(k!) for k = 0, 1, ..., grown on demand
_LOG2_FACT: list = []


def log2_factorial(n: int) -> float:
    """log2(n!) as a sum of log2 k in 96-bit arithmetic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    with mpmath.workprec(PRECISION_BITS):
        if not _LOG2_FACT:
            _LOG2_FACT.extend([mpmath.mpf(0), mpmath.mpf(0)])
        for k in range(len(_LOG2_FACT), n + 1):
            _LOG2_FACT.append(_LOG2_FACT[-1] + mpmath.log(k, 2))
        return float(_LOG2_FACT[n])


def hamming_type_bound_exact(n: int, t: int) -> Fraction:
    table = sphere_sizes(n)
    if not 0 <= t <= table.diameter:
        raise ValueError(f"t={t} outside [0, {table.diameter}]")
    return Fraction(math.factorial(n), sum(table.sizes[: t + 1]))


def hamming_type_bound(n: int, t: int) -> float:
    """log2 of n! / sum_{i<=t} K_n(i)."""
    return log2_exact(hamming_type_bound_exact(n, t))


def code_rate(n: int, log2M: float) -> float:
    if log2M < 0:
        raise ValueError("log2M must be nonnegative")
    if n < 2:
        raise ValueError("rate needs n >= 2")
    return float(log2M) / log2_factorial(n)


def encoding_redundancy(n: int) -> tuple[float, float]:
    """(1 - m/log2 n!, (3 - log2 e) n / log2 n!) for the plain Gray-map encoding."""
    if n < 2:
        raise ValueError("need n >= 2")
    lf = log2_factorial(n)
    m = GrayLayout(n).m
    return 1 - m / lf, (3 - math.log2(math.e)) * n / lf


@dataclass(frozen=True)
class CodeTriple:
    n: int
    log2M: float
    d: int
    construction: str
    seed: dict = field(default_factory=dict)

    def as_tuple(self) -> tuple:
        return (self.n, self.log2M, self.d)


def _bch_seed(length: int, t: int) -> tuple[dict, int, int]:
    """(descriptor, actual dimension, corrector radius) for a BCH seed shortened to ``length``."""
    d = bch_for_length(length, t).descriptor
    return d.to_json(), d.dimension, d.corrector_radius


def parameter_table(
    construction: str,
    *,
    n: Optional[int] = None,
    q: Optional[int] = None,
    l: Optional[int] = None,
    t_values: Iterable[int] = (),
    dims: Iterable[int] = (),
    row_dim: int = 9,
    dimension: str = "actual",
) -> list[CodeTriple]:
    """Code triples (n, log2 M, d) obtained from descriptor arithmetic alone.

    I:    q = 2^m, one row per t.
    II:   n, BCH seeds of length m(n), one row per requested t.
    IIIA: n, BCH seeds of length n - 1, one row per requested t.
    IIIB: q, l, seed RS[q-1, row_dim] x RS[q-2, k_b], one row per k_b in ``dims``.

    For BCH seeds, ``dimension="design"`` reports the guaranteed dimension
    length - ext_degree * t instead of the true one.
    """
    if dimension not in ("actual", "design"):
        raise ValueError("dimension must be 'actual' or 'design'")
    rows: list[CodeTriple] = []
    if construction == "I":
        from .gf import prime_power

        p, m = prime_power(q)
        for t in t_values:
            nn, bits, d = pp_parameters(p, m, t)
            rows.append(CodeTriple(nn, bits, d, "I", {"p": p, "m": m, "t": t}))
    elif construction == "II":
        length = GrayLayout(n).m
        e = max(2, length.bit_length())
        for t in t_values:
            seed, k, _ = _bch_seed(length, t)
            if dimension == "design":
                k = design_dimension(e, t, length)
            rows.append(CodeTriple(n, k, 2 * t + 1, "II", seed))
    elif construction == "IIIA":
        for t in t_values:
            seed, k, radius = _bch_seed(n - 1, t)
            rows.append(CodeTriple(n, k, 2 * radius_iiia(radius) + 1, "IIIA", seed))
    elif construction == "IIIB":
        if q is None or l is None:
            raise ValueError("IIIB needs q and l")
        if 2 * (l - 1) * (q - 1) != (q - 1) * (q - 2):
            raise ValueError("the RS product seed needs 2(l-1) = q - 2")
        for kb in dims:
            seed = product_code(reed_solomon(q, q - 1, row_dim), reed_solomon(q, q - 2, kb)).descriptor
            rows.append(CodeTriple(
                (2 * l + 1) * (q - 1), seed.dimension_bits,
                2 * radius_iiib(seed.corrector_radius, q) + 1, "IIIB", seed.to_json(),
            ))
    else:
        raise ValueError(f"unknown construction {construction!r}")
    return rows


def table_to_csv(rows: Sequence[CodeTriple]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "log2M", "d", "construction", "seed"])
    for r in rows:
        w.writerow([r.n, r.log2M, r.d, r.construction, json.dumps(r.seed, sort_keys=True)])
    return buf.getvalue()


def table_to_json(rows: Sequence[CodeTriple]) -> str:
    return json.dumps([asdict(r) for r in rows], sort_keys=True, indent=1)
