"""Parsing, enumeration, weight statistics, and elementary transforms."""

import numpy as np
import pytest

from mincodes import (
    BudgetExceededError,
    LinearCode,
    ParseError,
    WeightEnumerator,
    codewords,
    corpus,
    dual_code,
    format_matrix,
    macwilliams_dual,
    min_distance,
    parity_extend,
    parse_code,
    puncture,
    replicate,
    residual_code,
    simplex,
    weight_enumerator,
)
from mincodes import code as code_mod
from conftest import random_code

HAMMING_7_4 = "1000011\n0100101\n0010110\n0001111"


class TestParsing:
    def test_basic(self):
        c = parse_code("10\n01", 2)
        assert (c.n, c.k, c.q) == (2, 2, 2)

    def test_whitespace_comments_blank_lines(self):
        text = "# header\n1 0 1\n\n0 1 1\n# trailing comment\n"
        c = parse_code(text, 2)
        assert np.array_equal(c.generator, [[1, 0, 1], [0, 1, 1]])

    def test_row_continuation(self):
        c = parse_code("10\\\n1\n011", 2)
        assert np.array_equal(c.generator, [[1, 0, 1], [0, 1, 1]])

    def test_m6_corpus_matrix(self):
        c = parse_code(corpus.get("m6-15").matrix_text(), 2)
        assert (c.n, c.k) == (15, 6)

    def test_rank_deficient_rejected(self):
        with pytest.raises(ParseError, match="rank"):
            parse_code("11\n11", 2)

    def test_rank_deficient_reduced_with_flag(self):
        c = parse_code("11\n11", 2, allow_rank_deficient=True)
        assert (c.n, c.k) == (2, 1)

    def test_ragged_rows(self):
        with pytest.raises(ParseError, match="row 2"):
            parse_code("101\n01", 2)

    def test_bad_symbol_location(self):
        with pytest.raises(ParseError, match="row 2, column 3"):
            parse_code("000111\n012021", 2)

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_code("  \n# nothing\n", 2)

    def test_round_trip(self):
        c = parse_code(HAMMING_7_4, 2)
        assert parse_code(format_matrix(c), 2) == c


class TestLinearCode:
    def test_generator_is_read_only(self):
        c = parse_code("10\n01", 2)
        with pytest.raises(ValueError):
            c.generator[0, 0] = 0

    def test_stored_exactly_as_given(self):
        mat = [[1, 1, 0], [1, 0, 1]]
        c = LinearCode(mat, 2)
        assert np.array_equal(c.generator, mat)
        std = c.standard_form()
        assert np.array_equal(std.generator, [[1, 0, 1], [0, 1, 1]])

    def test_contains(self):
        c = parse_code(HAMMING_7_4, 2)
        assert c.contains([1, 1, 0, 0, 1, 1, 0])
        assert not c.contains([1, 0, 0, 0, 0, 0, 0])

    def test_more_rows_than_columns(self):
        with pytest.raises(ValueError):
            LinearCode([[1], [1]], 2)


class TestCodewordStream:
    def test_lex_message_order(self):
        c = parse_code("10\n01", 3)
        msgs = [cw.symbols for cw in codewords(c)]
        assert msgs == [
            (0, 0), (0, 1), (0, 2),
            (1, 0), (1, 1), (1, 2),
            (2, 0), (2, 1), (2, 2),
        ]

    def test_weight_and_support(self):
        c = parse_code(HAMMING_7_4, 2)
        seen = list(codewords(c))
        assert len(seen) == 16
        for cw in seen:
            assert cw.weight == len(cw.support)
            assert all(cw.symbols[i] != 0 for i in cw.support)
        assert sum(1 for cw in seen if cw.weight == 0) == 1

    def test_simplex_counts(self):
        cws = list(codewords(simplex(3, 2)))
        assert len(cws) == 8
        assert sum(1 for cw in cws if cw.weight == 4) == 7

    def test_budget_refusal(self):
        c = simplex(5, 2)
        with pytest.raises(BudgetExceededError):
            list(codewords(c, max_codewords=16))


class TestWeightEnumerator:
    def test_hamming(self):
        we = weight_enumerator(parse_code(HAMMING_7_4, 2))
        assert we.counts == {0: 1, 3: 7, 4: 7, 7: 1}
        assert we.as_polynomial() == "1+7x^3+7x^4+x^7"
        assert we.min_weight == 3 and we.max_weight == 7
        assert we.divisibility == 1

    def test_repetition_code(self):
        for q in (2, 3, 4):
            c = LinearCode([[1] * 6], q)
            assert weight_enumerator(c).counts == {0: 1, 6: q - 1}

    def test_counts_sum_invariant(self, rng):
        for q in (2, 3, 4):
            for _ in range(10):
                k = int(rng.integers(1, 5))
                n = int(rng.integers(k, k + 6))
                c = random_code(rng, k, n, q, nonzero_columns=False)
                we = weight_enumerator(c)
                assert sum(we.counts.values()) == q**k
                assert we.counts[0] == 1
                assert we.max_weight <= n

    def test_matches_naive_enumeration(self, rng):
        for q in (2, 3, 4):
            c = random_code(rng, 4, 9, q, nonzero_columns=False)
            naive = {}
            for cw in codewords(c):
                naive[cw.weight] = naive.get(cw.weight, 0) + 1
            assert weight_enumerator(c).counts == naive

    def test_min_distance_equals_smallest_positive_weight(self, rng):
        c = random_code(rng, 5, 12, 2)
        we = weight_enumerator(c)
        assert min_distance(c) == min(w for w in we.counts if w > 0)

    def test_hamming_min_distance(self):
        assert min_distance(parse_code(HAMMING_7_4, 2)) == 3

    def test_validation(self):
        with pytest.raises(ValueError):
            WeightEnumerator({0: 2, 3: 6}, 7, 3, 2)
        with pytest.raises(ValueError):
            WeightEnumerator({0: 1, 9: 7}, 7, 3, 2)
        with pytest.raises(ValueError):
            WeightEnumerator({0: 1, 3: 5}, 7, 3, 2)

    def test_from_polynomial(self):
        we = WeightEnumerator.from_polynomial("1+30x^6+15x^8+18x^10", 15, 6, 2)
        assert we.counts == {0: 1, 6: 30, 8: 15, 10: 18}


class TestPackedWeights:
    def test_packed_agrees_with_naive_on_random_codewords(self, rng):
        """Packed popcount weights vs per-symbol counting, 1000 samples."""
        checked = 0
        while checked < 1000:
            k = int(rng.integers(2, 12))
            n = int(rng.integers(k, 70))
            c = random_code(rng, k, n, 2, nonzero_columns=False)
            rows = code_mod.packed_rows(c)
            for _ in range(25):
                msg = rng.integers(0, 2, size=k)
                vec = (msg @ c.generator) % 2
                packed = np.zeros(rows.shape[1], dtype=np.uint64)
                for i in range(k):
                    if msg[i]:
                        packed ^= rows[i]
                assert int(np.bitwise_count(packed).sum()) == int(vec.sum())
                checked += 1


class TestTransforms:
    def test_residual_of_simplex(self):
        s = simplex(3, 2)
        word = next(cw for cw in codewords(s) if cw.weight == 4)
        res = residual_code(s, word)
        assert (res.n, res.k) == (3, 2)
        assert set(weight_enumerator(res).counts) == {0, 2}

    def test_residual_rejects_full_support(self):
        c = LinearCode([[1, 1, 1]], 2)
        with pytest.raises(ValueError, match="full support"):
            residual_code(c, [1, 1, 1])

    def test_residual_rejects_non_codeword(self):
        c = parse_code(HAMMING_7_4, 2)
        with pytest.raises(ValueError, match="not a codeword"):
            residual_code(c, [1, 1, 0, 0, 0, 0, 0])

    def test_residual_dimension_drop(self):
        entry = corpus.get("m5-4div-17")
        c = entry.load()
        word = next(cw for cw in codewords(c) if cw.weight == 12)
        res = residual_code(c, word)
        assert res.n == 5 and res.k <= 4

    def test_puncture(self):
        c = LinearCode([[1, 1]], 2)
        p = puncture(c, 0)
        assert (p.n, p.k) == (1, 1)

    def test_puncture_rank_drop_named(self):
        c = parse_code("10\n01", 2)
        with pytest.raises(ValueError, match="position 1"):
            puncture(c, 1)

    def test_parity_extend_makes_even(self):
        c = corpus.load("m8-24")
        ext = parity_extend(c)
        assert ext.n == 25
        assert weight_enumerator(ext).divisibility % 2 == 0

    def test_parity_extend_rejects_nonbinary(self):
        with pytest.raises(ValueError):
            parity_extend(LinearCode([[1, 1, 1]], 3))

    def test_puncture_then_extend_recovers_even_code(self):
        for eid in ("m6-15", "m8-24-even"):
            c = corpus.load(eid)
            we = weight_enumerator(c).counts
            for pos in range(0, c.n, 5):
                redone = parity_extend(puncture(c, pos))
                assert weight_enumerator(redone).counts == we

    def test_replicate_identity(self):
        c = parse_code(HAMMING_7_4, 2)
        assert replicate(c, 1) == c

    def test_replicate_scales_weights(self):
        s = simplex(2, 2)
        r = replicate(s, 2)
        assert weight_enumerator(r).counts == {0: 1, 4: 3}

    def test_replicate_substitutes_exponent(self, rng):
        c = random_code(rng, 3, 6, 3, nonzero_columns=False)
        base = weight_enumerator(c).counts
        tripled = weight_enumerator(replicate(c, 3)).counts
        assert tripled == {3 * w: cnt for w, cnt in base.items()}


class TestMacWilliams:
    def test_hamming_dual(self):
        we = weight_enumerator(parse_code(HAMMING_7_4, 2))
        assert macwilliams_dual(we).counts == {0: 1, 4: 7}

    def test_full_code_dual_is_zero_code(self):
        c = parse_code("10\n01", 2)
        dual = macwilliams_dual(weight_enumerator(c))
        assert dual.counts == {0: 1} and dual.k == 0

    def test_involution_on_random_codes(self, rng):
        for q in (2, 3, 4):
            c = random_code(rng, 3, 8, q, nonzero_columns=False)
            we = weight_enumerator(c)
            assert macwilliams_dual(macwilliams_dual(we)).counts == we.counts

    def test_matches_brute_force_dual(self, rng):
        for q in (2, 3):
            for _ in range(5):
                k = int(rng.integers(1, 4))
                n = int(rng.integers(k + 1, 9))
                c = random_code(rng, k, n, q, nonzero_columns=False)
                expected = weight_enumerator(dual_code(c)).counts
                assert macwilliams_dual(weight_enumerator(c)).counts == expected

    def test_invalid_enumerator_detected(self):
        # passes the shape checks but no [3,2]_2 code has three weight-3 words
        bogus = WeightEnumerator({0: 1, 3: 3}, 3, 2, 2)
        with pytest.raises(ValueError, match="not an integer|negative"):
            macwilliams_dual(bogus)

    def test_budget_guard_on_enumeration(self):
        big = simplex(10, 2)
        with pytest.raises(BudgetExceededError):
            weight_enumerator(big, max_codewords=512)
