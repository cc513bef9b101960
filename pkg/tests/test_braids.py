import itertools
import random

import pytest
from hypothesis import given, strategies as st

from bicoh import kernels
from bicoh.braids import (BraidWord, LabeledBraid, WordFormatError, are_equal, dynnikov,
                          exponent_sum, format_word, free_reduce, is_trivial, labeled_equal,
                          parse_word, perm_of, transport)
from bicoh.oracle import closure_classes

from gen import random_word, scramble


def W(n, *letters):
    return BraidWord(n, tuple(letters))


def test_braid_relation():
    assert are_equal(W(3, 1, 2, 1), W(3, 2, 1, 2))


def test_far_commutation():
    assert are_equal(W(4, 1, 3), W(4, 3, 1))


def test_generator_not_its_inverse():
    assert not are_equal(W(2, 1), W(2, -1))


def test_adjacent_generators_do_not_commute():
    assert not are_equal(W(3, 1, 2), W(3, 2, 1))


def test_word_text_round_trip():
    w = parse_word("n=4 s1 S3 s2")
    assert w == W(4, 1, -3, 2)
    assert format_word(w) == "n=4 s1 S3 s2"
    assert parse_word("n=3") == W(3)
    assert parse_word(" n = 3 s1S2 ") == W(3, 1, -2)


@pytest.mark.parametrize("text", ["s1", "n=2 s2", "n=3 x1", "n=3 s0", "n=0"])
def test_bad_word_text(text):
    with pytest.raises(WordFormatError):
        parse_word(text)


def test_perm_is_left_action_in_letter_order():
    # strand 1 goes to position 3 under s1 s2
    assert perm_of(W(3, 1, 2)) == (2, 0, 1)
    assert transport(("a", "b", "c"), perm_of(W(3, 1, 2))) == ("b", "c", "a")


def test_free_reduce():
    assert free_reduce(W(3, 1, 2, -2, -1, 2)) == W(3, 2)


def test_exponent_sum():
    assert exponent_sum(W(3, 1, -2, 2, 2)) == 2


def test_labeled_equal_checks_labels():
    assert labeled_equal(LabeledBraid(("x", "y"), W(2, 1)), LabeledBraid(("x", "y"), W(2, 1)))
    assert not labeled_equal(LabeledBraid(("x", "y"), W(2, 1)), LabeledBraid(("y", "x"), W(2, 1)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_closure_oracle_exhaustively(n):
    classes = closure_classes(n, 8)
    letters = [k for i in range(1, n) for k in (i, -i)]
    words = [w for L in range(6) for w in itertools.product(letters, repeat=L)]
    by_oracle, by_coords = {}, {}
    for w in words:
        o, d = classes.component(w), dynnikov(BraidWord(n, w))
        assert by_oracle.setdefault(o, d) == d
        assert by_coords.setdefault(d, o) == o


words = st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(1, n - 1).flatmap(lambda k: st.sampled_from((k, -k))), max_size=12)))


@given(words)
def test_word_times_inverse_is_trivial(nw):
    n, w = nw
    b = BraidWord(n, tuple(w))
    assert is_trivial(b * b.inverse())
    assert are_equal(b, free_reduce(b))


@given(words, st.integers(0, 2 ** 31))
def test_equal_words_share_invariants(nw, seed):
    n, w = nw
    w2 = scramble(random.Random(seed), w, n, 12)
    a, b = BraidWord(n, tuple(w)), BraidWord(n, w2)
    assert are_equal(a, b)
    assert perm_of(a) == perm_of(b)
    assert exponent_sum(a) == exponent_sum(b)


@given(words, words)
def test_invariant_mismatch_means_unequal(a, b):
    if a[0] != b[0]:
        return
    x, y = BraidWord(a[0], tuple(a[1])), BraidWord(b[0], tuple(b[1]))
    if perm_of(x) != perm_of(y) or exponent_sum(x) != exponent_sum(y):
        assert not are_equal(x, y)


def test_long_words_fall_back_to_exact_integers():
    w = BraidWord(4, (1, -2, 3) * 200)
    coords = dynnikov(w)
    assert max(abs(c) for c in coords) > 2 ** 63
    assert are_equal(w * W(4, 2, -2), w)
    assert not is_trivial(w)


@pytest.mark.skipif("compiled" not in kernels.available_backends(), reason="extension not built")
def test_backends_agree():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(2, 7)
        w = random_word(rng, n, rng.randint(0, 120))
        start = [0, 1] * n
        try:
            kernels.use_backend("python")
            slow = kernels.dynnikov_apply(start, w)
        finally:
            kernels.use_backend("compiled")
        assert kernels.dynnikov_apply(start, w) == slow
