"""Small helpers for sets of non-negative integers stored as Python ints.

Bit ``k`` of a mask is set iff ``k`` belongs to the set.  Everything in the
package that touches gaps or elements goes through these helpers.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator


def to_mask(values: Iterable[int]) -> int:
    mask = 0
    for v in values:
        if v < 0:
            raise ValueError(f"negative value {v} cannot be stored in a mask")
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest(mask: int) -> int:
    """Least member of a non-empty mask."""
    return (mask & -mask).bit_length() - 1


def interval(lo: int, hi: int) -> int:
    """Mask of the integers ``lo..hi`` inclusive (empty when ``hi < lo``)."""
    if hi < lo:
        return 0
    return ((1 << (hi - lo + 1)) - 1) << lo


def reverse(mask: int, width: int) -> int:
    """Mirror the low ``width`` bits: bit ``k`` moves to ``width - 1 - k``."""
    return int(format(mask, f"0{width}b")[::-1], 2) if width else 0


@lru_cache(maxsize=64)
def divisor_masks(n: int) -> tuple[int, ...]:
    """``divisor_masks(n)[x]`` is the mask of positive divisors of ``x``, for ``x <= n``."""
    table = [0] * (n + 1)
    for d in range(1, n + 1):
        bit = 1 << d
        for multiple in range(d, n + 1, d):
            table[multiple] |= bit
    return tuple(table)


def divisor_closure(mask: int, table: tuple[int, ...]) -> int:
    """All positive divisors of the members of ``mask`` (0 is dropped)."""
    mask &= ~1
    out = 0
    # Descending order: a member that already divides something seen is skipped.
    while mask:
        top = mask.bit_length() - 1
        mask ^= 1 << top
        if not (out >> top) & 1:
            out |= table[top]
    return out


def add_generator(members: int, g: int, width: int) -> int:
    """Close ``members`` under adding ``g`` any number of times, truncated to ``width`` bits."""
    window = (1 << width) - 1
    step = g
    members = (members | (members << g)) & window
    while step < width:
        step <<= 1
        members = (members | (members << step)) & window
    return members


def monoid_closure(generators: int, width: int) -> int:
    """Submonoid of N generated by ``generators``, truncated to ``width`` bits."""
    members = 1
    for g in iter_bits(generators & ~1):
        if g >= width:
            break
        if not (members >> g) & 1:
            members = add_generator(members, g, width)
    return members
