import itertools

import pytest
from hypothesis import given, strategies as st

from rankmod.gf import (
    Field,
    LinearizedPoly,
    enumerate_perm_linearized,
    eval_linearized,
    gf,
    gf_order,
    is_permutation_poly,
    least_primitive_polynomial,
    linearized_root_space,
    prime_power,
)

SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4)]


def test_prime_power():
    assert prime_power(64) == (2, 6)
    assert prime_power(27) == (3, 3)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            prime_power(bad)


@pytest.mark.parametrize("p, m, low", [
    (2, 3, (1, 1, 0)),
    (2, 4, (1, 1, 0, 0)),
    (2, 8, (1, 0, 1, 1, 1, 0, 0, 0)),
])
def test_canonical_moduli(p, m, low):
    # x^3+x+1, x^4+x+1, x^8+x^4+x^3+x^2+1 (low coefficients first)
    assert tuple(least_primitive_polynomial(p, m))[:m] == low


def test_alpha_has_full_order():
    for p, m in SMALL + [(2, 8), (3, 3), (5, 2)]:
        F = gf(p, m)
        powers = {F.exp(k) for k in range(F.q - 1)}
        assert powers == set(range(1, F.q))
        assert F.pow(F.alpha, F.q - 1) == 1


@pytest.mark.parametrize("p, m", SMALL)
def test_field_axioms_exhaustive(p, m):
    F = gf(p, m)
    els = range(F.q)
    for a in els:
        assert F.add(a, 0) == a
        assert F.add(a, F.neg(a)) == 0
        assert F.mul(a, 1) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.log(F.exp(F.log(a))) == F.log(a)
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            assert F.sub(F.add(a, b), b) == a
            if b:
                assert F.mul(F.div(a, b), b) == a
    for a, b, c in itertools.product(els, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


@given(st.sampled_from([(2, 8), (3, 4), (5, 3), (2, 10)]), st.data())
def test_field_axioms_sampled(pm, data):
    F = gf(*pm)
    a, b, c = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    if a:
        assert F.mul(a, F.inv(a)) == 1
    # Frobenius is additive
    assert F.pow(F.add(a, b), F.p) == F.add(F.pow(a, F.p), F.pow(b, F.p))


def test_element_wrapper():
    F = gf_order(16)
    a, b = F(7), F(9)
    assert int(a + b) == F.add(7, 9)
    assert int(a * b) == F.mul(7, 9)
    assert a * a.inverse() == F(1)
    assert a ** (F.q - 1) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_polynomial_helpers():
    F = gf(2, 4)
    roots = [3, 5, 9]
    f = F.poly_from_roots(roots)
    assert all(F.poly_eval(f, r) == 0 for r in roots)
    g = F.poly_mul(f, [1, 7])
    qq, r = F.poly_divmod(g, f)
    assert F.poly_trim(r) == [] and qq == [1, 7]
    xs, ys = [1, 2, 4, 8], [3, 0, 11, 6]
    h = F.interpolate(xs, ys)
    assert [F.poly_eval(h, x) for x in xs] == ys


def test_linearized_trivia():
    F = gf(2, 3)
    ident = LinearizedPoly(F, (1,))
    assert all(ident(a) == a for a in range(F.q))
    L = LinearizedPoly(F, (3, 5, 1))
    assert L(0) == 0
    assert is_permutation_poly(ident)
    # x^p - x vanishes on the prime subfield
    frob_minus_id = LinearizedPoly(gf(3, 2), (gf(3, 2).neg(1), 1))
    assert not is_permutation_poly(frob_minus_id)
    assert set(range(3)) <= set(linearized_root_space(frob_minus_id))


def test_linearized_matches_ordinary_form():
    F = gf(3, 2)
    L = LinearizedPoly(F, (2, 5))
    ordinary = L.ordinary_coeffs()
    assert len(ordinary) == 4  # degree p^1 = 3
    for a in range(F.q):
        assert eval_linearized(L, a) == F.poly_eval(ordinary, a)


def test_gf4_nu0():
    polys = enumerate_perm_linearized(gf(2, 2), 0)
    assert [L.coeffs for L in polys] == [(1,), (2,), (3,)]


def brute_count(F: Field, nu: int) -> int:
    count = 0
    for coeffs in itertools.product(range(F.q), repeat=nu + 1):
        vals = {eval_linearized(LinearizedPoly(F, coeffs), a) for a in range(F.q)}
        count += len(vals) == F.q
    return count


# For nu = 1, a0*x + a1*x^p permutes iff a0*a1 = 0 (not both) or -a0/a1 is
# not a (p-1)-th power: 2(q-1) + (q-1)(q-1)(1 - 1/gcd(p-1, q-1)) polynomials.
@pytest.mark.parametrize("p, m, nu, expected", [
    (2, 3, 1, 14),
    (2, 3, 2, 168),      # |GL(3, 2)|
    (2, 4, 1, 30),
    (3, 2, 1, 48),
    (5, 2, 1, 480),
    (3, 3, 1, 390),
])
def test_enumeration_counts(p, m, nu, expected):
    F = gf(p, m)
    polys = enumerate_perm_linearized(F, nu)
    assert len(polys) == expected
    if F.q ** (nu + 1) <= 4096:
        assert brute_count(F, nu) == expected


@pytest.mark.parametrize("p, m", [(2, 2), (2, 3), (2, 4), (3, 2), (2, 5), (5, 2), (3, 3), (2, 6), (7, 2)])
def test_lemma_lower_bounds(p, m):
    F = gf(p, m)
    q = F.q
    for nu in range(0, m):
        if q ** (nu + 1) > 2**17:
            break
        polys = enumerate_perm_linearized(F, nu)
        assert len(polys) >= q**nu
        if p > 2:
            assert len(polys) >= (1 - 1 / (p - 1) + 1 / (q * (p - 1))) * q ** (nu + 1)


@pytest.mark.parametrize("p, m, nu", [(2, 3, 2), (2, 4, 1), (3, 2, 1), (2, 6, 1), (3, 3, 1), (2, 5, 2)])
def test_enumerated_polys_permute(p, m, nu):
    F = gf(p, m)
    polys = enumerate_perm_linearized(F, nu)
    keys = [L.coeffs[::-1] for L in polys]
    assert keys == sorted(keys)
    for L in polys:
        assert sorted(L(a) for a in range(F.q)) == list(range(F.q))


@given(st.sampled_from([(2, 4), (3, 2), (2, 5), (5, 2), (3, 3)]), st.data())
def test_root_space_is_subspace(pm, data):
    F = gf(*pm)
    coeffs = tuple(data.draw(st.integers(0, F.q - 1)) for _ in range(F.m))
    roots = set(linearized_root_space(LinearizedPoly(F, coeffs)))
    assert 0 in roots
    for a in roots:
        for c in range(F.p):
            assert F.mul(c, a) in roots
        for b in roots:
            assert F.add(a, b) in roots
    # size of an F_p-subspace is a power of p
    size = len(roots)
    while size % F.p == 0:
        size //= F.p
    assert size == 1


def test_enumeration_cap():
    with pytest.raises(ValueError):
        enumerate_perm_linearized(gf(2, 8), 3, cap=2**20)
