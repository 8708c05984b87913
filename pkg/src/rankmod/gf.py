"""Arithmetic in GF(p^m), polynomials over it, and linearized polynomials.

Elements are plain ints in [0, q-1]: the residue c_0 + c_1 x + ... + c_{m-1} x^{m-1}
is stored as sum(c_i * p**i). Multiplication goes through exp/log tables of a
fixed primitive element, so fields are meant for q up to a few tens of
thousands.

Each (p, m) gets a canonical modulus: the smallest (as an integer in base p)
monic primitive polynomial of degree m. For p = 2 this gives x^3+x+1,
x^4+x+1, x^8+x^4+x^3+x^2+1, the usual tables.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

ENUMERATION_CAP = 2**24
MAX_ORDER = 2**20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^m; raises ValueError when q is not a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            if not _is_prime(p):
                break
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r == 1:
                return p, m
            break
    raise ValueError(f"{q} is not a prime power")


def _digits(v: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        v, d = divmod(v, p)
        out.append(d)
    return out


def _undigits(ds: Iterable[int], p: int) -> int:
    v = 0
    for d in reversed(list(ds)):
        v = v * p + d
    return v


def _mul_x(v: int, p: int, m: int, modulus: Sequence[int]) -> int:
    # multiply residue by x and reduce; modulus = low coefficients c_0..c_{m-1} of monic f
    ds = [0] + _digits(v, p, m)
    top = ds.pop()
    if top:
        ds = [(d - top * c) % p for d, c in zip(ds, modulus)]
    return _undigits(ds, p)


def _x_order_is_full(p: int, m: int, low: Sequence[int]) -> bool:
    q = p**m
    if low[0] == 0:
        return False
    v = 1
    for k in range(1, q - 1):
        v = _mul_x(v, p, m, low)
        if v == 1:
            return False
    return _mul_x(v, p, m, low) == 1


def least_primitive_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Coefficients (c_0, ..., c_{m-1}, 1) of the smallest monic primitive polynomial."""
    if m == 1:
        return (0, 1)
    for code in range(p**m):
        low = _digits(code, p, m)
        if _x_order_is_full(p, m, low):
            return tuple(low) + (1,)
    raise AssertionError("a primitive polynomial always exists")


class Field:
    """GF(p^m) with int-coded elements."""

    def __init__(self, p: int, m: int = 1, modulus: Optional[Sequence[int]] = None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        q = p**m
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds table limit {MAX_ORDER}")
        self.p, self.m, self.q = p, m, q
        self.modulus = tuple(modulus) if modulus is not None else least_primitive_polynomial(p, m)
        if len(self.modulus) != m + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        self._build_tables()

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        self._add_table = None
        if p != 2:
            self._add_table = [
                [_undigits([(x + y) % p for x, y in zip(_digits(a, p, m), _digits(b, p, m))], p)
                 for b in range(q)]
                for a in range(q)
            ]
            self._neg = [_undigits([(-d) % p for d in _digits(a, p, m)], p) for a in range(q)]
        low = self.modulus[:-1]

        def times(a: int, b: int) -> int:
            # schoolbook product of residues, only used while building tables
            acc = 0
            run = a
            for d in _digits(b, p, m):
                for _ in range(d):
                    acc = self._raw_add(acc, run)
                run = _mul_x(run, p, m, low)
            return acc

        for cand in range(1, q):
            exp = [1]
            v = 1
            for _ in range(q - 2):
                v = times(v, cand)
                if v == 1:
                    break
                exp.append(v)
            else:
                if q == 2 or times(v, cand) == 1:
                    self.alpha = cand
                    break
        else:  # pragma: no cover
            raise ValueError("modulus is not irreducible")
        if len(set(exp)) != q - 1:
            raise ValueError("modulus is not irreducible")
        self._exp = exp + exp
        self._log = [0] * q
        for i, v in enumerate(exp):
            self._log[v] = i

    def _raw_add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return _undigits([(x + y) % self.p for x, y in zip(_digits(a, self.p, self.m), _digits(b, self.p, self.m))], self.p)

    def __repr__(self) -> str:
        return f"Field(p={self.p}, m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, self._check(value))

    def _check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")
        return a

    def elements(self) -> range:
        return range(self.q)

    # scalar arithmetic

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self._add_table[a][b]

    def neg(self, a: int) -> int:
        return a if self.p == 2 else self._neg[a]

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self._add_table[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def exp(self, k: int) -> int:
        """alpha ** k."""
        return self._exp[k % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def sum(self, values: Iterable[int]) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    # polynomials, lowest degree first

    @staticmethod
    def poly_trim(a: Sequence[int]) -> list[int]:
        a = list(a)
        while a and a[-1] == 0:
            a.pop()
        return a

    def poly_add(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = self.add(out[i], v)
        return self.poly_trim(out)

    def poly_sub(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        return self.poly_add(a, [self.neg(v) for v in b])

    def poly_scale(self, a: Sequence[int], c: int) -> list[int]:
        return self.poly_trim([self.mul(v, c) for v in a])

    def poly_mul(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = self.add(out[i + j], self.mul(x, y))
        return self.poly_trim(out)

    def poly_divmod(self, a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
        b = self.poly_trim(b)
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        rem = self.poly_trim(a)
        if len(rem) < len(b):
            return [], rem
        lead_inv = self.inv(b[-1])
        quot = [0] * (len(rem) - len(b) + 1)
        for shift in range(len(rem) - len(b), -1, -1):
            c = self.mul(rem[shift + len(b) - 1], lead_inv)
            quot[shift] = c
            if c:
                for j, y in enumerate(b):
                    rem[shift + j] = self.sub(rem[shift + j], self.mul(c, y))
        return self.poly_trim(quot), self.poly_trim(rem[: len(b) - 1])

    def poly_eval(self, a: Sequence[int], x: int) -> int:
        acc = 0
        for c in reversed(a):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def poly_from_roots(self, roots: Iterable[int]) -> list[int]:
        out = [1]
        for r in roots:
            out = self.poly_mul(out, [self.neg(r), 1])
        return out

    def interpolate(self, xs: Sequence[int], ys: Sequence[int]) -> list[int]:
        """Lagrange interpolation through distinct points."""
        if len(set(xs)) != len(xs):
            raise ValueError("interpolation points must be distinct")
        full = self.poly_from_roots(xs)
        out: list[int] = []
        for i, (xi, yi) in enumerate(zip(xs, ys)):
            if yi == 0:
                continue
            basis, _ = self.poly_divmod(full, [self.neg(xi), 1])
            denom = self.poly_eval(basis, xi)
            out = self.poly_add(out, self.poly_scale(basis, self.div(yi, denom)))
        return out


@lru_cache(maxsize=None)
def gf(p: int, m: int = 1) -> Field:
    """Cached canonical field GF(p^m)."""
    return Field(p, m)


def gf_order(q: int) -> Field:
    return gf(*prime_power(q))


class FieldElement:
    """Operator-friendly wrapper around an int-coded element."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements from different fields")
            return other.value
        return self.field._check(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"GF({self.field.q})({self.value})"


@dataclass(frozen=True)
class LinearizedPoly:
    """L(x) = sum_i coeffs[i] * x^(p^i) over ``field``."""

    field: Field
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a linearized polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(self.field._check(c) for c in self.coeffs))

    @property
    def nu(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Ordinary degree p^i of the leading nonzero term (-1 for the zero polynomial)."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return self.field.p**i
        return -1

    def ordinary_coeffs(self) -> list[int]:
        p = self.field.p
        out = [0] * (p**self.nu + 1)
        for i, c in enumerate(self.coeffs):
            out[p**i] = c
        return Field.poly_trim(out)

    def __call__(self, a) -> int:
        return eval_linearized(self, a)


def eval_linearized(L: LinearizedPoly, a) -> int:
    if isinstance(a, FieldElement):
        if a.field != L.field:
            raise ValueError("element and polynomial live in different fields")
        a = a.value
    F = L.field
    a = F._check(a)
    acc, power = 0, a
    for c in L.coeffs:
        acc = F.add(acc, F.mul(c, power))
        power = F.pow(power, F.p)
    return acc


def is_permutation_poly(L: LinearizedPoly) -> bool:
    """True iff L has no nonzero root, i.e. L permutes the field."""
    return all(eval_linearized(L, a) != 0 for a in range(1, L.field.q))


def enumerate_perm_linearized(field: Field, nu: int, cap: int = ENUMERATION_CAP) -> list[LinearizedPoly]:
    """All linearized permutation polynomials of degree <= nu.

    Ordered lexicographically on (a_nu, ..., a_0), which is also the order of
    the returned ``coeffs`` tuples read back to front.
    """
    if nu < 0:
        raise ValueError("nu must be nonnegative")
    q, p = field.q, field.p
    if q ** (nu + 1) > cap:
        raise ValueError(f"q^(nu+1) = {q ** (nu + 1)} exceeds enumeration cap {cap}")
    # frob[i][a] = a^(p^i); mul_rows[c][v] = c*v
    frob = [[field.pow(a, p**i) for a in range(1, q)] for i in range(nu + 1)]
    mul_rows = [[field.mul(c, v) for v in range(q)] for c in range(q)]
    add = field.add
    out = []
    for top_first in itertools.product(range(q), repeat=nu + 1):
        coeffs = top_first[::-1]
        rows = [mul_rows[c] for c in coeffs]
        ok = True
        for k in range(q - 1):
            acc = 0
            for i, row in enumerate(rows):
                acc = add(acc, row[frob[i][k]])
            if acc == 0:
                ok = False
                break
        if ok:
            out.append(LinearizedPoly(field, coeffs))
    return out


def linearized_root_space(L: LinearizedPoly) -> list[int]:
    return [a for a in range(L.field.q) if eval_linearized(L, a) == 0]
