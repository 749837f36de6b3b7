"""Free-word arithmetic, palindrome predicate, and the quasi-lengths."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from groupwidths.free_words import (
    FreeWord,
    MonoidWord,
    format_free_word,
    format_monoid_word,
    free_alphabet,
    free_commutator,
    free_invert,
    free_multiply,
    is_word_palindrome,
    parse_free_word,
    parse_monoid_word,
    ql,
    reduce_word,
    tr,
)

from conftest import random_reduced_word

letters_rank2 = st.sampled_from(["x1", "x1^-1", "x2", "x2^-1"])
monoid_words = st.lists(letters_rank2, max_size=40).map(lambda ls: MonoidWord(tuple(ls)))


class TestTr:
    def test_examples(self):
        assert tr(0) == 0
        assert tr(4) == 1
        assert tr(-7) == -1

    def test_table(self):
        # residues mod 3 with 2 mapped to -1
        assert [tr(m) for m in range(-4, 5)] == [-1, 0, 1, -1, 0, 1, -1, 0, 1]

    @given(st.integers(), st.integers())
    def test_subadditivity_window(self, m, n):
        assert tr(m) + tr(n) - 3 <= tr(m + n) <= tr(m) + tr(n) + 3

    @given(st.integers())
    def test_odd(self, m):
        assert tr(-m) == -tr(m)
        assert tr(m + 3) == tr(m)


class TestReduce:
    def test_cancellation(self):
        assert reduce_word(MonoidWord(("x1", "x1^-1"))).is_identity()

    def test_already_reduced(self):
        w = parse_monoid_word("x2^-1 x2^-1 x2^-1 x1^-1 x1^-1 x1^-1 x2 x1 x2 x1 x2 x1")
        expected = ((2, -3), (1, -3), (2, 1), (1, 1), (2, 1), (1, 1), (2, 1), (1, 1))
        assert reduce_word(w).syllables == expected

    def test_syllable_merge(self):
        assert reduce_word(MonoidWord(("x1", "x1", "x1", "x1", "x1"))).syllables == ((1, 5),)

    @given(monoid_words)
    def test_idempotent(self, w):
        reduced = reduce_word(w, rank=2)
        assert reduce_word(reduced.to_letters(), rank=2) == reduced

    @given(monoid_words, monoid_words)
    def test_retraction(self, u, v):
        lhs = reduce_word(u * v, rank=2)
        assert lhs == reduce_word(u, rank=2) * reduce_word(v, rank=2)


class TestPalindromePredicate:
    def test_examples(self):
        assert is_word_palindrome(MonoidWord(("s1", "x", "s1")))
        assert not is_word_palindrome(MonoidWord(("x", "y")))
        assert is_word_palindrome(parse_monoid_word("s1 s2 x x x s2 s1"))
        assert is_word_palindrome(MonoidWord())

    @given(monoid_words)
    def test_reverse_involution(self, w):
        assert w.reverse().reverse() == w
        if is_word_palindrome(w):
            assert is_word_palindrome(w.reverse())

    @given(monoid_words)
    def test_built_palindromes(self, w):
        assert is_word_palindrome(w * w.reverse())


class TestGroupOps:
    def test_multiply_cancel(self):
        x = FreeWord.generator(2, 1)
        assert free_multiply(x, x.inverse()).is_identity()

    def test_invert(self):
        w = parse_free_word("x1^2 x2")
        assert free_invert(w) == parse_free_word("x2^-1 x1^-2")

    def test_commutator(self):
        x, y = FreeWord.generator(2, 1), FreeWord.generator(2, 2)
        assert free_commutator(x, y) == parse_free_word("x1^-1 x2^-1 x1 x2")
        assert free_commutator(x, x).is_identity()

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            free_multiply(FreeWord.generator(2, 1), FreeWord.generator(3, 1))

    def test_group_axioms_random(self):
        rng = random.Random(11)
        for _ in range(300):
            rank = rng.randint(2, 4)
            f = random_reduced_word(rng, rank, 20)
            g = random_reduced_word(rng, rank, 20)
            h = random_reduced_word(rng, rank, 20)
            assert (f * g) * h == f * (g * h)
            assert (f * f.inverse()).is_identity()
            assert (f * g).inverse() == g.inverse() * f.inverse()


class TestQl:
    def test_empty(self):
        assert ql(FreeWord.identity(2)) == 0

    def test_witness_word(self):
        assert ql(parse_free_word("x2^-3 x1^-3 x2 x1 x2 x1 x2 x1")) == 6

    def test_hand_example(self):
        # tr(2) + tr(1) + tr(-1) = -1 + 1 - 1
        assert ql(parse_free_word("x1^2 x2 x1^-1")) == -1

    def test_accepts_unreduced(self):
        assert ql(MonoidWord(("x1", "x1^-1", "x2"))) == ql(parse_free_word("x2"))

    def test_quasi_morphism_bounds_random(self):
        rng = random.Random(23)
        for _ in range(500):
            rank = rng.randint(2, 4)
            f = random_reduced_word(rng, rank, 60)
            g = random_reduced_word(rng, rank, 60)
            assert ql(f) + ql(g) - 3 <= ql(f * g) <= ql(f) + ql(g) + 3
            assert ql(g.inverse()) == -ql(g)
            assert -9 <= ql(free_commutator(f, g)) <= 9


class TestAlphabet:
    def test_free_alphabet(self):
        a = free_alphabet(2)
        assert a.inverse_letter("x1") == "x1^-1"
        assert a.inverse_letter("x1^-1") == "x1"
        assert all(a.inverse_letter(a.inverse_letter(l)) == l for l in a.letters)

    def test_bad_involution(self):
        from groupwidths.free_words import Alphabet

        with pytest.raises(ValueError):
            Alphabet(("p", "q"), {"p": "q", "q": "p", "r": "p"})
        with pytest.raises(ValueError):
            Alphabet(("p", "q", "r"), {"p": "q", "q": "r", "r": "p"})


class TestTextFormats:
    def test_free_word_round_trip(self):
        rng = random.Random(5)
        for _ in range(100):
            w = random_reduced_word(rng, 3, 30)
            assert parse_free_word(format_free_word(w), rank=3) == w

    def test_identity_text(self):
        assert format_free_word(FreeWord.identity(2)) == "1"
        assert parse_free_word("1", rank=2).is_identity()

    def test_commutator_shorthand(self):
        x, y = FreeWord.generator(2, 1), FreeWord.generator(2, 2)
        assert parse_free_word("[x,y]") == free_commutator(x, y)
        assert parse_free_word("[x,y] x1^2").syllables == (free_commutator(x, y) * FreeWord(2, ((1, 2),))).syllables

    def test_monoid_round_trip(self):
        w = parse_monoid_word("s1 s2 y^-1 s2 s1")
        assert format_monoid_word(w) == "s1 s2 y^-1 s2 s1"
        assert format_monoid_word(MonoidWord()) == "1"

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_free_word("z7")
        with pytest.raises(ValueError):
            parse_free_word("[x,y")
