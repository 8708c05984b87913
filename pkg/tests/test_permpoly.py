import pytest
from hypothesis import given, strategies as st

from rankmod.gf import gf
from rankmod.perm import (
    KendallChannelConfig,
    Permutation,
    adjacent_swap,
    apply_kendall_errors,
    kendall_distance,
    random_permutation,
)
from rankmod.permpoly import (
    PPCodec,
    accumulate,
    codebook_export,
    log_floor,
    pp_decode,
    pp_encode,
    pp_parameters,
    unaccumulate,
)
from rankmod.simulate import codebook, min_pairwise_kendall


@pytest.fixture(scope="module")
def gf8():
    return PPCodec(2, 3, 1)


@pytest.fixture(scope="module")
def gf16():
    return PPCodec(2, 4, 2)


def test_log_floor():
    assert [log_floor(x, 2) for x in (1, 2, 3, 4, 7, 8, 32)] == [0, 1, 1, 2, 2, 3, 5]
    assert log_floor(8, 3) == 1
    with pytest.raises(ValueError):
        log_floor(0, 2)


@pytest.mark.parametrize("m, t, triple", [
    (6, 15, (63, 30, 31)),
    (6, 23, (63, 24, 47)),
    (8, 63, (255, 56, 127)),
    (8, 95, (255, 48, 191)),
])
def test_parameter_triples(m, t, triple):
    assert pp_parameters(2, m, t) == triple


def test_pp_parameters_too_many_errors():
    with pytest.raises(ValueError):
        pp_parameters(2, 3, 3)


def test_index_zero_is_identity(gf8):
    assert gf8.codebook[0].coeffs == (1, 0, 0)
    assert gf8.encode(0) == Permutation.identity(7)
    assert pp_encode(gf8, 0) == Permutation.identity(7)


def test_codebook_size_guarantee(gf8, gf16):
    for codec in (gf8, gf16, PPCodec(3, 2, 1), PPCodec(5, 2, 3)):
        assert codec.size >= codec.q**codec.nu
    assert gf8.size == 168 and gf8.nu == 2
    assert gf16.size == 20160 and gf16.nu == 3


def test_betas(gf8, gf16):
    for codec in (gf8, gf16, PPCodec(3, 2, 1)):
        assert len(set(codec.betas)) == codec.n
        # 1 + alpha + ... + alpha^(q-2) = 0 once q > 2, so the last point is zero
        assert codec.betas[-1] == 0
        assert all(b != 0 for b in codec.betas[:-1])
    assert gf8.betas == [1, 3, 7, 4, 2, 5, 0]


@given(st.sampled_from([(2, 3), (2, 4), (3, 2), (5, 2)]), st.data())
def test_unaccumulate_inverts(pm, data):
    F = gf(*pm)
    values = data.draw(st.lists(st.integers(0, F.q - 1), max_size=30))
    assert unaccumulate(F, accumulate(F, values)) == values


def field_image(F, sigma):
    return [F.exp(v - 1) for v in sigma.entries]


@given(st.sampled_from([(2, 4), (3, 2), (2, 6)]), st.data())
def test_single_swap_is_single_symbol_error(pm, data):
    F = gf(*pm)
    sigma = Permutation(data.draw(st.permutations(range(1, F.q))))
    j = data.draw(st.integers(1, F.q - 2))
    a = accumulate(F, field_image(F, sigma))
    b = accumulate(F, field_image(F, adjacent_swap(sigma, j)))
    assert sum(x != y for x, y in zip(a, b)) == 1


@pytest.mark.parametrize("pm", [(2, 4), (3, 2), (2, 5)])
def test_kendall_errors_bound_hamming(pm, rng):
    F = gf(*pm)
    for _ in range(300):
        sigma = random_permutation(F.q - 1, rng)
        t = int(rng.integers(0, 8))
        pi = apply_kendall_errors(sigma, KendallChannelConfig(t), rng)
        a = accumulate(F, field_image(F, sigma))
        b = accumulate(F, field_image(F, pi))
        assert sum(x != y for x, y in zip(a, b)) <= kendall_distance(sigma, pi)


def test_field_image_matches_codec(gf8):
    sigma = Permutation((3, 1, 4, 2, 7, 5, 6))
    assert gf8.to_field(sigma) == field_image(gf8.field, sigma)
    assert gf8.from_field(gf8.to_field(sigma)) == sigma


def test_gf8_exhaustive(gf8):
    words = codebook(gf8)
    assert len(set(words)) == 168
    assert min_pairwise_kendall(words) >= 3
    for index, sigma in enumerate(words):
        assert gf8.decode(sigma) == index
        for j in range(1, 7):
            assert gf8.decode(adjacent_swap(sigma, j)) == index


def test_gf9_exhaustive():
    codec = PPCodec(3, 2, 1)
    words = codebook(codec)
    assert min_pairwise_kendall(words) >= 3
    for index, sigma in enumerate(words):
        for j in range(1, codec.n):
            assert codec.decode(adjacent_swap(sigma, j)) == index


def test_gf16_random_errors(gf16, rng):
    for _ in range(500):
        index = gf16.random_message(rng)
        sigma = gf16.encode(index)
        received = apply_kendall_errors(sigma, KendallChannelConfig(int(rng.integers(0, 3))), rng)
        assert pp_decode(gf16, received) == index


def test_decoder_never_crashes_far_away(gf16, rng):
    outcomes = set()
    for _ in range(300):
        received = random_permutation(15, rng)
        out = gf16.decode(received)
        if out is not None:
            assert kendall_distance(received, gf16.encode(out)) <= 14 * 15 // 2
        outcomes.add(out is None)
    assert True in outcomes


def test_index_of_rejects_non_members(gf8):
    assert gf8.index_of((0, 0, 0)) is None
    assert gf8.index_of((1, 0, 0)) == 0
    with pytest.raises(IndexError):
        gf8.encode(168)
    with pytest.raises(ValueError):
        gf8.decode(Permutation.identity(8))


def test_export_and_config(gf8):
    export = codebook_export(gf8)
    assert len(export) == 168 and export[0] == [1, 0, 0]
    assert gf8.config() == {"construction": "I", "p": 2, "m": 3, "t": 1}
    assert gf8.descriptor()["codebook_size"] == 168


def test_invalid_t():
    with pytest.raises(ValueError):
        PPCodec(2, 3, 3)
