"""
Side information of a compression set.

A compression set stores its k examples once, sorted by sample index. The
side information restores the n ordered groups from that sorted list:

    [unary group sizes: s_1 ones, 0, s_2 ones, 0, ...]   k + n bits
    [rank of the permutation, Lehmer code]               bit_length(k! - 1) bits

The permutation maps group order to sorted order and is the one a stable
sort produces, so equal sample indices keep their group order. The total
never exceeds ceil(k * log2(k)) + 2n bits, because log2(k!) <= k * log2(k) - (k - 1).
"""

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from sckit.sckit_core.exceptions import DecodeError, InvalidArgumentError


@dataclass(frozen=True)
class SideInfo:
    """A bit string stored as an integer, most significant bit first."""

    value: int
    bit_length: int

    def __post_init__(self):
        if self.bit_length < 0 or self.value < 0 or self.value >> self.bit_length:
            raise InvalidArgumentError("side information value does not fit its bit length")

    def bits(self) -> str:
        """The bit string as text of '0' and '1'."""
        if self.bit_length == 0:
            return ""
        return format(self.value, f"0{self.bit_length}b")

    def to_bytes(self) -> bytes:
        """Big-endian bytes, ceil(bit_length / 8) of them."""
        return self.value.to_bytes((self.bit_length + 7) // 8, "big")

    @classmethod
    def from_bytes(cls, data: bytes, bit_length: int) -> "SideInfo":
        if len(data) != (bit_length + 7) // 8:
            raise DecodeError(f"{len(data)} bytes cannot hold exactly {bit_length} bits")
        value = int.from_bytes(data, "big")
        if value >> bit_length:
            raise DecodeError("side information has bits set beyond its length")
        return cls(value, bit_length)


class _Fenwick:
    """Binary indexed tree over 0/1 occupancy for order statistics."""

    def __init__(self, size: int, filled: bool = False):
        self.size = size
        self.tree = [0] * (size + 1)
        if filled:
            for i in range(1, size + 1):
                self.tree[i] += 1
                parent = i + (i & -i)
                if parent <= size:
                    self.tree[parent] += self.tree[i]

    def add(self, i: int, delta: int) -> None:
        i += 1
        while i <= self.size:
            self.tree[i] += delta
            i += i & -i

    def prefix(self, i: int) -> int:
        """Number of occupied slots among 0..i-1."""
        total = 0
        while i > 0:
            total += self.tree[i]
            i -= i & -i
        return total

    def find(self, rank: int) -> int:
        """Smallest slot with ``rank`` occupied slots before it that is itself occupied."""
        pos = 0
        step = 1 << self.size.bit_length()
        while step:
            nxt = pos + step
            if nxt <= self.size and self.tree[nxt] <= rank:
                pos = nxt
                rank -= self.tree[nxt]
            step >>= 1
        return pos


def permutation_rank_width(k: int) -> int:
    """Bits used for the rank of a permutation of k elements."""
    return (math.factorial(k) - 1).bit_length()


def rank_permutation(perm: Sequence[int]) -> int:
    """Lehmer-code rank of a permutation of 0..k-1 in the factorial number system."""
    k = len(perm)
    remaining = _Fenwick(k, filled=True)
    rank = 0
    for j, p in enumerate(perm):
        digit = remaining.prefix(p)
        remaining.add(p, -1)
        rank = rank * (k - j) + digit
    return rank


def unrank_permutation(rank: int, k: int) -> List[int]:
    """Inverse of ``rank_permutation``."""
    if not 0 <= rank < math.factorial(k):
        raise DecodeError(f"permutation rank out of range for k={k}")
    digits = [0] * k
    for j in range(k - 1, -1, -1):
        rank, digits[j] = divmod(rank, k - j)
    remaining = _Fenwick(k, filled=True)
    perm = []
    for digit in digits:
        p = remaining.find(digit)
        remaining.add(p, -1)
        perm.append(p)
    return perm


def side_info_budget(k: int, n: int) -> int:
    """The bound ceil(k * log2(k)) + 2n on the side information length."""
    if k <= 1:
        return 2 * n
    return math.ceil(round(k * math.log2(k), 9)) + 2 * n


def encode_side_info(groups: Sequence[Sequence[int]]) -> Tuple[np.ndarray, SideInfo]:
    """
    Encode ordered groups of sample indices.

    Args:
        groups: n nonempty groups of sample indices (repeats allowed)

    Returns:
        (sorted indices of all k group members, side information)
    """
    if len(groups) == 0:
        raise InvalidArgumentError("at least one group is required")
    sizes = [len(g) for g in groups]
    if min(sizes) == 0:
        raise InvalidArgumentError("groups must be nonempty")

    flat = np.concatenate([np.asarray(g, dtype=np.int64) for g in groups])
    order = np.argsort(flat, kind="stable")
    # perm[j] = sorted position of the j-th group member
    perm = np.empty_like(order)
    perm[order] = np.arange(flat.size)

    prefix = 0
    for s in sizes:
        # s ones, then a terminating zero
        prefix = (prefix << (s + 1)) | (((1 << s) - 1) << 1)
    k = flat.size
    width = permutation_rank_width(k)
    value = (prefix << width) | rank_permutation(perm.tolist())
    return flat[order], SideInfo(value, k + len(sizes) + width)


def decode_side_info(side: SideInfo, n: int, k: int) -> List[List[int]]:
    """
    Decode side information into groups of sorted positions.

    Args:
        side: Encoded side information
        n: Number of groups
        k: Number of stored examples

    Returns:
        n lists of positions into the sorted example list

    Raises:
        DecodeError: If the bits are inconsistent with n and k
    """
    if n < 1 or k < 1:
        raise DecodeError("a compression set has at least one group and one example")
    width = permutation_rank_width(k)
    if side.bit_length != k + n + width:
        raise DecodeError(
            f"side information has {side.bit_length} bits, expected {k + n + width} for "
            f"n={n}, k={k}"
        )
    bits = side.bits()
    prefix = bits[: k + n]
    sizes = [len(run) for run in prefix.split("0")[:-1]]
    if not prefix.endswith("0") or len(sizes) != n or sum(sizes) != k:
        raise DecodeError("group boundary bits are inconsistent with the stored examples")
    if min(sizes) == 0:
        raise DecodeError("side information encodes an empty group")

    perm = unrank_permutation(int(bits[k + n :] or "0", 2), k)
    groups, start = [], 0
    for s in sizes:
        groups.append(perm[start : start + s])
        start += s
    return groups
