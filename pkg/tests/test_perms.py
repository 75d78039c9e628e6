from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibperm.errors import (
    DuplicateValueError,
    OutOfRangeValueError,
    SizeLimitError,
    UnsupportedLengthError,
)
from fibperm.perms import (
    avoids_all,
    brute_force_av,
    contains_pattern,
    direct_sum,
    format_permutation,
    inversions,
    make_pattern_set,
    make_permutation,
    parse_permutation,
    skew_sum,
    standardize,
)
from helpers import naive_avoids_all, naive_contains, permutations_up_to

ALL_LEN3 = [tuple(p) for p in permutations((1, 2, 3))]
ALL_LEN4 = [tuple(p) for p in permutations((1, 2, 3, 4))]


class TestMakePermutation:
    def test_accepts_valid(self):
        assert make_permutation([3, 1, 2]) == (3, 1, 2)
        assert make_permutation(()) == ()

    def test_rejects_duplicates(self):
        with pytest.raises(DuplicateValueError):
            make_permutation((1, 1))

    def test_rejects_out_of_range(self):
        with pytest.raises(OutOfRangeValueError):
            make_permutation((0, 1))
        with pytest.raises(OutOfRangeValueError):
            make_permutation((1, 3))


class TestStandardize:
    def test_examples(self):
        assert standardize((4, 9, 2)) == (2, 3, 1)
        assert standardize(()) == ()
        assert standardize((7,)) == (1,)

    def test_rejects_repeats(self):
        with pytest.raises(DuplicateValueError):
            standardize((5, 5))

    @given(permutations_up_to(7))
    def test_fixes_permutations(self, perm):
        assert standardize(perm) == perm


class TestSums:
    def test_direct_sum(self):
        assert direct_sum((1, 3, 2), (3, 1, 2)) == (1, 3, 2, 6, 4, 5)
        assert direct_sum((), (2, 1)) == (2, 1)

    def test_skew_sum(self):
        assert skew_sum((1, 3, 2), (3, 1, 2)) == (4, 6, 5, 3, 1, 2)
        assert skew_sum((1,), ()) == (1,)

    @given(permutations_up_to(5), permutations_up_to(5))
    def test_inversions_add_up(self, a, b):
        assert inversions(direct_sum(a, b)) == inversions(a) + inversions(b)
        assert inversions(skew_sum(a, b)) == (
            inversions(a) + inversions(b) + len(a) * len(b)
        )


class TestInversions:
    def test_examples(self):
        assert inversions(()) == 0
        assert inversions((1, 2, 3)) == 0
        assert inversions((3, 2, 1)) == 3
        assert inversions((1, 5, 3, 2, 4)) == 4

    def test_reverse_identity_is_maximal(self):
        n = 8
        assert inversions(tuple(range(n, 0, -1))) == n * (n - 1) // 2


class TestContainment:
    def test_examples(self):
        assert contains_pattern((2, 3, 1), (2, 3, 1))
        assert contains_pattern((4, 3, 2, 1), (3, 2, 1))
        assert not contains_pattern((1, 2, 3), (2, 1))
        assert contains_pattern((3, 5, 1, 4, 2), (2, 3, 1))
        assert not contains_pattern((2, 1, 3, 5, 4), (3, 1, 2))

    def test_short_perm_cannot_contain(self):
        assert not contains_pattern((1, 2), (1, 2, 3))

    @given(permutations_up_to(7), st.sampled_from(ALL_LEN3 + ALL_LEN4))
    def test_matches_naive(self, perm, pattern):
        assert contains_pattern(perm, pattern) == naive_contains(perm, pattern)

    @given(permutations_up_to(7))
    def test_avoids_all_matches_naive(self, perm):
        pats = make_pattern_set([(2, 3, 1), (3, 1, 2), (1, 4, 3, 2)])
        assert avoids_all(perm, pats) == naive_avoids_all(perm, pats)


class TestBruteForce:
    def test_frozen_small(self):
        assert brute_force_av(3, {(2, 3, 1), (3, 1, 2), (3, 2, 1)}) == [
            (1, 2, 3),
            (1, 3, 2),
            (2, 1, 3),
        ]
        assert brute_force_av(0, {(2, 3, 1)}) == [()]

    def test_lex_sorted(self):
        members = brute_force_av(5, {(2, 3, 1), (3, 1, 2)})
        assert members == sorted(members)
        assert len(members) == 16  # 2^{5-1}

    def test_limits(self):
        with pytest.raises(UnsupportedLengthError):
            brute_force_av(-1, {(2, 3, 1)})
        with pytest.raises(SizeLimitError):
            brute_force_av(11, {(2, 3, 1)})

    def test_pattern_set_validation(self):
        with pytest.raises(UnsupportedLengthError):
            make_pattern_set([])
        with pytest.raises(UnsupportedLengthError):
            make_pattern_set([(2, 1)])


class TestTextForms:
    def test_format(self):
        assert format_permutation((3, 1, 2)) == "3 1 2"
        assert format_permutation(()) == ""

    def test_parse_spaced(self):
        assert parse_permutation("3 1 2") == (3, 1, 2)
        assert parse_permutation("10 1 2 3 4 5 6 7 8 9") == (
            10, 1, 2, 3, 4, 5, 6, 7, 8, 9,
        )

    def test_parse_compact(self):
        assert parse_permutation("4321") == (4, 3, 2, 1)
        assert parse_permutation("1") == (1,)

    def test_parse_rejects_bad_input(self):
        with pytest.raises(DuplicateValueError):
            parse_permutation("1 1")
        with pytest.raises(OutOfRangeValueError):
            parse_permutation("0 1")
        with pytest.raises(ValueError):
            parse_permutation("a b")

    @given(permutations_up_to(8))
    def test_round_trip(self, perm):
        if perm:
            assert parse_permutation(format_permutation(perm)) == perm
