"""Small helpers for vertex sets stored as integer bitmasks.

A vertex set over ground set [n] is an int whose bit i is set iff vertex i
is a member.  Python ints are arbitrary precision, so there is no hard cap
on n beyond memory.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def as_mask(x, n: int | None = None) -> int:
    """Coerce an int mask or an iterable of vertex ids into a mask."""
    if isinstance(x, int):
        return x
    return mask_of(x)


def bits(m: int) -> Iterator[int]:
    """Yield set bit positions of m in ascending order."""
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def size(m: int) -> int:
    return m.bit_count()
