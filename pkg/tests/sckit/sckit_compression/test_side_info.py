"""
Tests for compression side information.
"""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sckit.sckit_compression import (
    SideInfo,
    decode_side_info,
    encode_side_info,
    permutation_rank_width,
    rank_permutation,
    side_info_budget,
    unrank_permutation,
)
from sckit.sckit_core.exceptions import DecodeError, InvalidArgumentError

groups_strategy = st.lists(
    st.lists(st.integers(0, 30), min_size=1, max_size=6), min_size=1, max_size=8
)


class TestPermutationRank:
    """Test cases for Lehmer-code ranking."""

    def test_identity_is_zero(self):
        assert rank_permutation([0, 1, 2, 3]) == 0

    def test_reverse_is_last(self):
        assert rank_permutation([2, 1, 0]) == 5

    def test_small_permutation(self):
        assert rank_permutation([2, 0, 1]) == 4
        assert unrank_permutation(4, 3) == [2, 0, 1]

    def test_width(self):
        assert permutation_rank_width(1) == 0
        assert permutation_rank_width(3) == 3
        assert permutation_rank_width(4) == 5

    def test_out_of_range(self):
        with pytest.raises(DecodeError):
            unrank_permutation(6, 3)

    @given(st.permutations(list(range(40))))
    def test_unrank_inverts_rank(self, perm):
        assert unrank_permutation(rank_permutation(perm), len(perm)) == perm


class TestSideInfoBits:
    """Test cases for the SideInfo bit string."""

    def test_bits_and_bytes(self):
        side = SideInfo(0b1011, 4)
        assert side.bits() == "1011"
        assert side.to_bytes() == b"\x0b"

    def test_empty(self):
        assert SideInfo(0, 0).bits() == ""
        assert SideInfo(0, 0).to_bytes() == b""

    def test_value_too_wide(self):
        with pytest.raises(InvalidArgumentError):
            SideInfo(8, 3)

    def test_stray_high_bits(self):
        with pytest.raises(DecodeError):
            SideInfo.from_bytes(b"\xff", 3)

    def test_wrong_byte_count(self):
        with pytest.raises(DecodeError):
            SideInfo.from_bytes(b"\x00\x00", 3)


class TestEncodeSideInfo:
    """Test cases for encode_side_info / decode_side_info."""

    def test_worked_example(self):
        indices, side = encode_side_info([[5, 2], [2]])
        assert indices.tolist() == [2, 2, 5]
        assert side.bits() == "11010" + "100"
        assert decode_side_info(side, 2, 3) == [[2, 0], [1]]

    def test_single_group_single_example(self):
        indices, side = encode_side_info([[7]])
        assert indices.tolist() == [7]
        assert side.bits() == "10"

    @given(groups_strategy)
    def test_groups_recovered(self, groups):
        indices, side = encode_side_info(groups)
        k = sum(len(g) for g in groups)
        decoded = decode_side_info(side, len(groups), k)
        assert [[int(indices[p]) for p in g] for g in decoded] == groups

    @given(groups_strategy)
    def test_length_within_budget(self, groups):
        _, side = encode_side_info(groups)
        k = sum(len(g) for g in groups)
        assert side.bit_length <= side_info_budget(k, len(groups))

    def test_budget_values(self):
        assert side_info_budget(1, 1) == 2
        assert side_info_budget(4, 2) == 12
        assert side_info_budget(10, 3) == math.ceil(10 * math.log2(10)) + 6

    def test_empty_group_rejected(self):
        with pytest.raises(InvalidArgumentError):
            encode_side_info([[1], []])
        with pytest.raises(InvalidArgumentError):
            encode_side_info([])


class TestDecodeSideInfo:
    """Test cases for malformed side information."""

    def test_length_mismatch(self):
        _, side = encode_side_info([[1, 2]])
        with pytest.raises(DecodeError):
            decode_side_info(side, 2, 2)

    def test_encoded_empty_group(self):
        # sizes 0 and 1
        with pytest.raises(DecodeError):
            decode_side_info(SideInfo(0b010, 3), 2, 1)

    def test_missing_terminator(self):
        # three ones and no closing zero for n=1, k=2
        with pytest.raises(DecodeError):
            decode_side_info(SideInfo(0b1110, 4), 1, 2)
