import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abelian_border import (
    BinaryWord,
    all_border_lengths,
    border_array,
    border_array_incremental,
    border_array_naive,
    border_array_packed,
    canonicalize,
    complement,
    parse_word,
    shortest_border,
    step_walk,
)
from abelian_border import engine as engine_mod

from . import oracles
from .conftest import random_word

ENGINES = [border_array_naive, border_array_incremental, border_array_packed]

# expected arrays produced by oracles.border_array
KNOWN = {
    "0001001": (0, 1, 2, 0, 4, 5, 0),
    "011011": (0, 0, 0, 3, 3, 3),
    "011010": (0, 0, 0, 3, 3, 5),
    "01101": (0, 0, 0, 3, 3),
    "1011": (0, 0, 2, 3),
    "0100": (0, 0, 2, 3),
    "0000": (0, 1, 2, 3),
    "0": (0,),
}


def test_frozen_values_match_oracle():
    for word, expected in KNOWN.items():
        assert oracles.border_array(word) == expected


@pytest.mark.parametrize("fn", ENGINES)
@pytest.mark.parametrize("word", sorted(KNOWN))
def test_known_arrays(fn, word):
    assert fn(parse_word(word)) == KNOWN[word]


@pytest.mark.parametrize("fn", ENGINES)
def test_empty_rejected(fn):
    with pytest.raises(ValueError):
        fn(parse_word(""))


@pytest.mark.parametrize("n", range(1, 11))
def test_exhaustive_small(n):
    for s in oracles.all_words(n):
        w = parse_word(s)
        expected = oracles.border_array(s) if n <= 8 else border_array_naive(w)
        for fn in ENGINES:
            assert fn(w) == expected, (fn.__name__, s)


@pytest.mark.parametrize("n", [63, 64, 65, 127, 128, 129, 191, 500, 2049])
def test_random_chunk_boundaries(rng, n):
    for _ in range(40):
        w = random_word(rng, n)
        ref = border_array_naive(w)
        assert border_array_incremental(w) == ref
        assert border_array_packed(w) == ref


@pytest.mark.parametrize(
    "text",
    [
        "0" + "1" * 300,  # long borderless prefixes, walk stuck at -1
        "01" * 200,
        "0" * 257,
        "1" * 130 + "0" * 130,
        "0" * 100 + "1" * 300 + "0" * 50,  # walk offset far beyond one chunk
    ],
)
def test_structured_words(text):
    w = parse_word(text)
    ref = border_array_naive(w)
    assert border_array_incremental(w) == ref
    assert border_array_packed(w) == ref


def test_byte_tables_against_direct_walk():
    zero, delta = engine_mod._byte_tables()
    rng = np.random.default_rng(5)
    for code in rng.integers(0, 1 << 16, 2000):
        plus, minus = int(code) >> 8, int(code) & 0xFF
        steps = [((plus >> t) & 1) - ((minus >> t) & 1) if ((plus ^ minus) >> t) & 1 else 0 for t in range(8)]
        assert delta[code] == sum(steps)
        for off in range(-8, 9):
            f, first = off, 0
            for t, s in enumerate(steps, 1):
                f += s
                if f == 0:
                    first = t
                    break
            assert zero[code, off + 8] == first


def test_auto_dispatch():
    assert engine_mod.resolve_engine("auto", 10) == "incremental"
    assert engine_mod.resolve_engine("auto", 5000) == "packed"
    assert engine_mod.resolve_engine("auto", 5000, threshold=10_000) == "incremental"
    with pytest.raises(ValueError):
        border_array(parse_word("01"), engine="bogus")


def test_all_border_lengths_examples():
    w = parse_word("0001001")
    assert all_border_lengths(w, 6) == (1, 2, 4, 5)
    assert all_border_lengths(w, 7) == ()
    assert all_border_lengths(parse_word("0"), 1) == ()
    assert all_border_lengths(parse_word("011011"), 4) == (1, 2, 3)
    with pytest.raises(IndexError):
        all_border_lengths(w, 8)


def test_shortest_border_examples():
    pi = border_array_naive(parse_word("0001001"))
    assert shortest_border(pi, 6) == 1
    assert shortest_border(pi, 7) is None
    assert shortest_border(border_array_naive(parse_word("011011")), 4) == 1
    with pytest.raises(IndexError):
        shortest_border(pi, 0)


def test_border_array_text_forms():
    pi = border_array_naive(parse_word("0001001"))
    assert pi.to_text() == "0,1,2,0,4,5,0"
    assert pi.to_json() == "[0, 1, 2, 0, 4, 5, 0]"
    assert pi.at(7) == 0 and pi.n == 7
    for text in ("0,1,2,0,4,5,0", "0 1 2 0 4 5 0", "[0,1,2,0,4,5,0]", " 0, 1 ,2,0,4,5,0\n"):
        assert pi.parse(text) == pi
    for bad in ("0,x", "[0, 1.5]", "0,-1", "[0"):
        with pytest.raises(ValueError):
            pi.parse(bad)


words = st.text(alphabet="01", min_size=1, max_size=90)


@settings(max_examples=300)
@given(words)
def test_properties(s):
    w = parse_word(s)
    pi = border_array_naive(w)
    assert pi == oracles.border_array(s)
    assert border_array_naive(complement(w)) == pi
    assert border_array_packed(w) == pi
    c = canonicalize(w)
    for i in range(1, len(s) + 1):
        borders = all_border_lengths(w, i)
        assert set(borders) == {i - j for j in borders}
        assert step_walk(w, i).zeros() == borders
        if pi[i - 1]:
            assert min(borders) == i - pi[i - 1] == shortest_border(pi, i)
            assert max(borders) == pi[i - 1]
        else:
            assert borders == ()
        if i > 1:
            assert (pi[i - 1] == i - 1) == (c.at(i) == 0)
            if c.at(i) == 1:
                assert pi[i - 1] <= pi[i - 2]


def test_step_walk_masks():
    w = parse_word("0001001")
    walk = step_walk(w, 6)
    assert walk.plus_mask & walk.minus_mask == 0
    assert walk.length == 6
    # g(j) = ones(prefix j) - ones(suffix j) of 000100
    assert walk.values() == [0, 0, 0, -1, 0, 0]


def test_large_random_agreement(rng):
    w = random_word(rng, 20000)
    assert border_array_packed(w) == border_array_incremental(w) == border_array_naive(w)
