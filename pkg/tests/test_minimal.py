"""Minimality oracles, divisibility, and bounds."""

import pytest

from mincodes import (
    BudgetExceededError,
    LinearCode,
    ashikhmin_barg,
    bounds_report,
    corpus,
    disjoint_subspaces_code,
    divisibility,
    griesmer_bound,
    is_minimal_geometric,
    is_minimal_support,
    parity_extend,
    parse_code,
    replicate,
    simplex,
    weight_enumerator,
)
from conftest import random_code


class TestOracles:
    def test_simplex_minimal(self):
        for k in (2, 3, 4, 5):
            s = simplex(k, 2)
            assert is_minimal_support(s)
            assert is_minimal_geometric(s)

    def test_nested_support_detected(self):
        c = parse_code("110\n001", 2)
        assert not is_minimal_support(c)
        assert not is_minimal_geometric(c)

    def test_m8_24_minimal(self):
        c = corpus.load("m8-24")
        assert is_minimal_support(c)
        assert is_minimal_geometric(c)

    def test_m9_16div_96_minimal(self):
        assert is_minimal_geometric(corpus.load("m9-16div-96"))

    def test_record_code_oracle_terminates(self):
        # distance-record code, not claimed minimal; only termination matters
        c = corpus.load("rec-56-24-13")
        assert is_minimal_geometric(c) in (True, False)

    def test_dimension_one_is_minimal(self):
        c = LinearCode([[1, 1, 1]], 2)
        assert is_minimal_support(c)
        assert is_minimal_geometric(c)

    def test_support_budget(self):
        with pytest.raises(BudgetExceededError, match="geometric"):
            is_minimal_support(simplex(18, 2))

    def test_oracles_agree_on_random_codes(self, rng):
        for q in (2, 3, 4):
            for _ in range(60):
                k = int(rng.integers(2, 7 if q == 2 else 5))
                n = int(rng.integers(k, k + 8))
                c = random_code(rng, k, n, q)
                assert is_minimal_support(c) == is_minimal_geometric(c), c.generator

    def test_equal_supports_imply_a_lighter_violation(self):
        # rows (1,1,1) and (1,2,1) share their support; their difference is a
        # weight-1 word properly inside it, so the code cannot be minimal
        c = parse_code("111\n121", 3)
        assert not is_minimal_support(c)
        assert not is_minimal_geometric(c)


class TestDivisibility:
    def test_known_values(self):
        assert divisibility(corpus.load("m6-15")) == 2
        assert divisibility(corpus.load("m7-8div-42")) == 8

    def test_simplex_divisibility(self):
        for k, q in [(3, 2), (4, 2), (2, 3), (3, 3), (2, 4)]:
            assert divisibility(simplex(k, q)) == q ** (k - 1)

    def test_accepts_enumerator(self):
        we = weight_enumerator(corpus.load("m9-8div-58"))
        assert divisibility(we) == 8


class TestAshikhminBarg:
    def test_su2_t2(self):
        assert ashikhmin_barg(disjoint_subspaces_code(2))

    def test_m9_26_false_negative(self):
        # weights 9..18 give ratio 1/2 exactly: condition fails, code is minimal
        c = corpus.load("m9-26")
        assert not ashikhmin_barg(c)
        assert is_minimal_geometric(c)

    def test_one_weight_code(self):
        assert ashikhmin_barg(simplex(4, 3))

    def test_sufficiency_on_random_codes(self, rng):
        hits = 0
        for _ in range(150):
            q = int(rng.choice([2, 3]))
            k = int(rng.integers(2, 6))
            n = int(rng.integers(k, k + 8))
            c = random_code(rng, k, n, q)
            if ashikhmin_barg(c):
                hits += 1
                assert is_minimal_support(c)
                assert is_minimal_geometric(c)
        assert hits > 0


class TestGriesmer:
    def test_values(self):
        assert griesmer_bound(4, 8, 2) == 15
        assert griesmer_bound(5, 27, 3) == 41
        assert griesmer_bound(1, 7, 2) == 7

    def test_matches_two_power_family(self):
        # d = 2^(k-1) forces length 2^k - 1, the simplex length
        for k in range(2, 8):
            assert griesmer_bound(k, 2 ** (k - 1), 2) == 2**k - 1

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            griesmer_bound(0, 3, 2)


class TestBounds:
    def test_all_minimal_corpus_codes_satisfy_bounds(self):
        for entry in corpus.entries():
            if not entry.expected_minimal or entry.tier != "fast":
                continue
            br = bounds_report(entry.load(), assume_minimal=True)
            assert br.all_satisfied, (entry.id, br.satisfied)

    def test_weight_eight_word_violates_wmax(self):
        c = parse_code("11111111\n01000000\n00100000\n00010000", 2)
        br = bounds_report(c, assume_minimal=True)
        assert br.w_max == 8 and br.wmax_ub == 5
        assert not br.satisfied["wmax"]
        assert br.certifies_non_minimal
        assert not is_minimal_support(c)

    def test_m7_20_exact_extremes(self):
        for eid in ("m7-20-a", "m7-20-b", "m7-20-c", "m7-20-d"):
            br = bounds_report(corpus.load(eid), assume_minimal=True)
            assert br.w_min == 7
            assert br.w_max == 14 == br.wmax_ub

    def test_report_fields(self):
        br = bounds_report(simplex(3, 2))
        assert br.length_lb == 6 and br.wmin_lb == 3 and br.wmax_ub == 5
        d = br.to_dict()
        assert set(d) == {"length_lb", "wmin_lb", "wmax_ub", "griesmer_lb", "satisfied"}


class TestPreservation:
    def test_replicate_preserves_minimality(self):
        for eid in ("m5-13-a", "m6-15", "m3q3-3div-12"):
            c = corpus.load(eid)
            for t in (2, 3):
                assert is_minimal_geometric(replicate(c, t)), (eid, t)

    def test_parity_extend_preserves_minimality(self):
        for eid in ("m5-13-a", "m5-13-b", "m8-24", "m9-26"):
            c = corpus.load(eid)
            assert divisibility(c) == 1  # odd weights present
            assert is_minimal_geometric(parity_extend(c)), eid
