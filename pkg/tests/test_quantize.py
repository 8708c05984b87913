import itertools

import pytest
from hypothesis import given, strategies as st

from rankmod.codes import LinearCode, bch_for_length, product_code, reed_solomon, repetition_code
from rankmod.config import build_codec
from rankmod.gf import gf
from rankmod.perm import (
    InversionVector,
    KendallChannelConfig,
    Permutation,
    apply_kendall_errors,
    kendall_ball,
)
from rankmod.quantize import QuantACodec, QuantBCodec, radius_iiia, radius_iiib
from rankmod.simulate import codebook, min_pairwise_kendall

TETRACODE = [[1, 0, 1, 1], [0, 1, 1, 2]]


@pytest.fixture(scope="module")
def q16():
    seed = product_code(reed_solomon(16, 15, 9), reed_solomon(16, 14, 3))
    return QuantBCodec(16, 8, seed)


# radius formulas

@pytest.mark.parametrize("t, r", [(0, 0), (1, 0), (2, 1), (3, 2), (4, 4), (5, 6), (6, 9), (7, 12)])
def test_radius_iiia(t, r):
    assert radius_iiia(t) == r == sum(i // 2 for i in range(1, t + 1))


def test_radius_iiib_examples():
    assert radius_iiib(41, 16) == 53
    assert radius_iiib(0, 16) == 0
    assert radius_iiib(23, 16) == 23
    with pytest.raises(ValueError):
        radius_iiib(-1, 4)


def brute_min_cost(t, q, l):
    cap = 2 * (q - 1)
    best = None
    for counts in itertools.product(range(cap + 1), repeat=l - 1):
        if sum(counts) >= t + 1:
            cost = sum(j * c for j, c in enumerate(counts, start=1))
            best = cost if best is None else min(best, cost)
    return best


@pytest.mark.parametrize("q, l", [(2, 2), (2, 4), (3, 3), (4, 3), (3, 5), (5, 4)])
def test_band_cost_minimum(q, l):
    # t + 1 errors must fit into the l - 1 bands
    for t in range(0, 2 * (q - 1) * (l - 1)):
        assert brute_min_cost(t, q, l) == radius_iiib(t, q) + 1


@pytest.mark.parametrize("q", [2, 4, 16])
def test_radius_iiib_growth(q):
    # r / (t^2 / 4(q-1)) tends to 1
    t = 200_000 * (q - 1)
    assert radius_iiib(t, q) / (t * t / (4 * (q - 1))) == pytest.approx(1, rel=1e-4)


# IIIA

@pytest.mark.parametrize("n, t, k, d", [
    (64, 5, 36, 13), (64, 6, 30, 19), (64, 7, 24, 25),
    (256, 5, 215, 13), (256, 6, 207, 19), (256, 7, 199, 25), (256, 8, 191, 33),
])
def test_iiia_triples(n, t, k, d):
    desc = build_codec({"construction": "IIIA", "n": n, "t": t}).descriptor()
    assert (desc["n"], desc["log2M"], desc["d"]) == (n, k, d)


def test_iiia_zero_message_and_range(rng):
    codec = QuantACodec(bch_for_length(63, 5))
    assert codec.encode((0,) * 36) == Permutation.identity(64)
    for _ in range(50):
        vec = codec.theta(codec.seed.encode(codec.random_message(rng)))
        assert all(0 <= x <= i for i, x in enumerate(vec.coords, start=1))


def test_iiia_requires_binary():
    with pytest.raises(ValueError):
        QuantACodec(repetition_code(3, 5))


@given(st.integers(2, 9), st.data())
def test_iiia_flip_count_within_mass(t, data):
    """Moving the inversion vector by l1 mass r flips at most t quantized bits."""
    n = 40
    codec = QuantACodec(bch_for_length(n - 1, 1))
    word = data.draw(st.lists(st.integers(0, 1), min_size=n - 1, max_size=n - 1))
    x = list(codec.theta(word).coords)
    y = list(x)
    mass = radius_iiia(t)
    while mass:
        i = data.draw(st.integers(1, n - 1))
        step = 1 if x[i - 1] == 0 else -1
        if 0 <= y[i - 1] + step <= i:
            y[i - 1] += step
            mass -= 1
    flips = sum(a != b for a, b in zip(word, codec.quantize(InversionVector(y))))
    assert flips <= t


def test_iiia_toy_balls():
    codec = QuantACodec(bch_for_length(15, 3))
    assert codec.radius == 2
    words = codebook(codec)
    assert min_pairwise_kendall(words) >= 2 * codec.radius + 1
    for message, sigma in zip(codec.all_messages(), words):
        for received, _ in kendall_ball(sigma, codec.radius):
            assert codec.decode(received) == message


def test_iiia_random_at_radius(rng):
    codec = build_codec({"construction": "IIIA", "n": 64, "t": 5})
    for _ in range(300):
        m = codec.random_message(rng)
        received = apply_kendall_errors(codec.encode(m), KendallChannelConfig(6), rng)
        assert codec.decode(received) == m


# IIIB

def oracle_symbol(k, x, q):
    """Bins [(2k-1)s - (k-1), (2k-1)s + k]; the first matching bin wins, overflow clamps."""
    w = 2 * k - 1
    for s in range(q):
        if w * s - (k - 1) <= x <= w * s + k:
            return s
    return q - 1


@pytest.mark.parametrize("q, l", [(3, 3), (4, 4), (16, 3)])
def test_iiib_quantizer_oracle(q, l):
    codec = QuantBCodec(q, l, repetition_code(q, 2 * (l - 1) * (q - 1)))
    for i in range(codec.dead + 1, codec.n):
        k = codec.band(i)
        assert 2 <= k <= l
        for x in range(0, i + 1):
            assert codec.quantize_coord(k, x) == oracle_symbol(k, x, q)


def test_iiib_band_layout():
    codec = QuantBCodec(3, 3, repetition_code(3, 8))
    assert codec.n == 14 and codec.dead == 5
    assert [codec.band(i) for i in range(1, 14)] == [0] * 5 + [2] * 4 + [3] * 4


def test_iiib_quantizer_consistency(q16, rng):
    for _ in range(50):
        word = q16.seed.encode(q16.random_message(rng))
        vec = q16.theta(word)
        assert all(0 <= x <= i for i, x in enumerate(vec.coords, start=1))
        assert all(x == 0 for x in vec.coords[: q16.dead])
        assert q16.quantize(vec) == word


def test_iiib_paper_instance(q16):
    d = q16.descriptor()
    assert (d["n"], d["log2M"], d["d"]) == (255, 108, 107)
    assert q16.radius == 23
    assert q16.encode((0,) * 27) == Permutation.identity(255)


def test_iiib_validation():
    with pytest.raises(ValueError):
        QuantBCodec(3, 3, repetition_code(3, 7))
    with pytest.raises(ValueError):
        QuantBCodec(4, 3, repetition_code(3, 8))
    with pytest.raises(ValueError):
        QuantBCodec(3, 1, repetition_code(3, 0 + 2))


@pytest.mark.parametrize("seed, l", [
    (repetition_code(3, 4), 2),
    (LinearCode(gf(3), TETRACODE), 2),
    (repetition_code(3, 8), 3),
], ids=["rep4", "tetracode", "rep8"])
def test_iiib_toy_balls(seed, l):
    codec = QuantBCodec(3, l, seed)
    words = codebook(codec)
    assert min_pairwise_kendall(words) >= 2 * codec.radius + 1
    for message, sigma in zip(codec.all_messages(), words):
        for received, _ in kendall_ball(sigma, codec.radius):
            assert codec.decode(received) == message


def test_iiib_random_at_radius(q16, rng):
    for _ in range(100):
        m = q16.random_message(rng)
        received = apply_kendall_errors(q16.encode(m), KendallChannelConfig(23), rng)
        assert q16.decode(received) == m


def test_iiib_far_received_no_crash(rng):
    codec = QuantBCodec(3, 3, repetition_code(3, 8))
    for _ in range(100):
        received = Permutation((rng.permutation(codec.n) + 1).tolist())
        out = codec.decode(received)
        assert out is None or len(out) == 1
    with pytest.raises(ValueError):
        codec.decode(Permutation.identity(5))
