"""Tests for signed Pauli words and their exact sign algebra."""

import numpy as np
import pytest

from conftest import all_signed_words, random_commuting_pair, random_word

from pauliham import (
    CommutationError,
    PauliSyntaxError,
    PauliWord,
    format_pauli,
    g,
    multiply,
    parse_pauli,
    symplectic_inner,
)
from pauliham import bits
from pauliham.oracle import dense


def g_reference(x1, z1, x2, z2):
    """Independent literal transcription of the four-case definition."""
    if (x1, z1) == (0, 0):
        return 0
    if (x1, z1) == (1, 1):
        return z2 - x2
    if (x1, z1) == (1, 0):
        return z2 * (2 * x2 - 1)
    return x2 * (1 - 2 * z2)


class TestG:
    def test_known_values(self):
        assert g(0, 0, 1, 1) == 0
        assert g(1, 0, 0, 1) == -1
        assert g(1, 1, 1, 1) == 0
        assert g(0, 1, 1, 0) == 1

    def test_all_sixteen_cases(self):
        for x1 in (0, 1):
            for z1 in (0, 1):
                for x2 in (0, 1):
                    for z2 in (0, 1):
                        assert g(x1, z1, x2, z2) == g_reference(x1, z1, x2, z2)

    def test_range(self):
        vals = {
            g(x1, z1, x2, z2)
            for x1 in (0, 1)
            for z1 in (0, 1)
            for x2 in (0, 1)
            for z2 in (0, 1)
        }
        assert vals == {-1, 0, 1}


class TestSymplecticInner:
    def test_anticommuting_single_qubit(self):
        assert symplectic_inner(parse_pauli("+X", 1), parse_pauli("+Z", 1)) == 1

    def test_two_sign_flips_cancel(self):
        assert symplectic_inner(parse_pauli("+XX", 2), parse_pauli("+ZZ", 2)) == 0

    def test_self_commutes(self):
        y = parse_pauli("+Y", 1)
        assert symplectic_inner(y, y) == 0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            symplectic_inner(parse_pauli("+X", 1), parse_pauli("+XX", 2))

    @pytest.mark.parametrize("n", [1, 2])
    def test_matches_dense_commutator_exhaustively(self, n):
        words = list(all_signed_words(n))
        for a in words:
            da = dense(a)
            for b in words:
                db = dense(b)
                commute = (da @ db) == (db @ da)
                assert (symplectic_inner(a, b) == 0) == commute


class TestMultiply:
    def test_self_product_is_identity(self):
        y = parse_pauli("+Y", 1)
        assert multiply(y, y) == PauliWord.identity(1)

    def test_xx_times_zz(self):
        out = multiply(parse_pauli("+XX", 2), parse_pauli("+ZZ", 2))
        assert format_pauli(out) == "-YY"

    def test_sign_conflict_gives_minus_identity(self):
        out = multiply(parse_pauli("+Z", 1), parse_pauli("-Z", 1))
        assert out.is_identity() and out.phase == 1

    def test_anticommuting_rejected(self):
        with pytest.raises(CommutationError):
            multiply(parse_pauli("+X", 1), parse_pauli("+Z", 1))

    @pytest.mark.parametrize("n", [1, 2])
    def test_matches_dense_product_exhaustively(self, n):
        words = list(all_signed_words(n))
        for a in words:
            da = dense(a)
            for b in words:
                if symplectic_inner(a, b):
                    continue
                assert (da @ dense(b)) == dense(multiply(a, b))

    def test_matches_dense_product_randomized_n6(self, rng):
        for _ in range(300):
            a, b = random_commuting_pair(rng, 6)
            assert (dense(a) @ dense(b)) == dense(multiply(a, b))

    def test_commutative_on_commuting_inputs(self, rng):
        for _ in range(200):
            a, b = random_commuting_pair(rng, 5)
            assert multiply(a, b) == multiply(b, a)

    def test_every_word_squares_to_identity(self, rng):
        for n in (1, 3, 64, 65):
            for _ in range(20):
                w = random_word(rng, n)
                assert multiply(w, w) == PauliWord.identity(n)


class TestParseFormat:
    def test_parse_examples(self):
        w = parse_pauli("+XZ", 2)
        assert w.phase == 0
        assert list(w.x_bits()) == [1, 0] and list(w.z_bits()) == [0, 1]
        y = parse_pauli("-Y", 1)
        assert y.phase == 1
        assert list(y.x_bits()) == [1] and list(y.z_bits()) == [1]
        i2 = parse_pauli("+II", 2)
        assert i2 == PauliWord.identity(2)

    def test_format_examples(self):
        assert format_pauli(PauliWord.from_bits(1, [1, 1], [1, 1])) == "-YY"
        assert format_pauli(PauliWord.identity(1)) == "+I"

    @pytest.mark.parametrize("n", [1, 2])
    def test_round_trip_exhaustive(self, n):
        import itertools

        for sign in "+-":
            for body in itertools.product("IXYZ", repeat=n):
                text = sign + "".join(body)
                assert format_pauli(parse_pauli(text, n)) == text

    def test_round_trip_across_word_boundaries(self, rng):
        for n in (63, 64, 65, 130):
            w = random_word(rng, n)
            assert parse_pauli(format_pauli(w), n) == w

    @pytest.mark.parametrize(
        "text,n",
        [
            ("XZ", 2),  # missing sign
            ("*XZ", 2),  # bad sign
            ("+XQ", 2),  # bad letter
            ("+X", 2),  # too short
            ("+XXX", 2),  # too long
            ("+iX", 1),  # imaginary phase
            ("-iZ", 1),
            ("", 1),
        ],
    )
    def test_rejects_bad_input(self, text, n):
        with pytest.raises(PauliSyntaxError):
            parse_pauli(text, n)


class TestStorageInvariants:
    def test_padding_bits_stay_zero(self, rng):
        for n in (1, 7, 63, 64, 65, 100):
            w = random_word(rng, n)
            assert bits.padding_is_zero(w.x, n)
            assert bits.padding_is_zero(w.z, n)
            sq = multiply(w, w)
            assert bits.padding_is_zero(sq.x, n)

    def test_immutable(self):
        w = parse_pauli("+X", 1)
        with pytest.raises(AttributeError):
            w.phase = 1
        with pytest.raises(ValueError):
            w.x[0] = 5

    def test_hashable_and_equal(self):
        a = parse_pauli("+XZ", 2)
        b = parse_pauli("+XZ", 2)
        assert a == b and hash(a) == hash(b)
        assert a != parse_pauli("-XZ", 2)

    def test_rejects_dirty_padding(self):
        x = np.array([1 << 40], np.uint64)  # bit above n=3
        with pytest.raises(ValueError):
            PauliWord(3, 0, x, np.zeros(1, np.uint64))
