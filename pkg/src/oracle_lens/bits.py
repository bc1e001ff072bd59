"""Bit strings, hidden strings and GF(2) helpers.

A bit string is a plain tuple of 0/1 ints. Position ``j`` holds coordinate
``x_j``, so position 0 is the distinguished answer bit. A hidden string
``k`` of length ``n`` is stored 0-based: ``k[j - 1]`` is ``k_j``.

Integer encodings put ``x_0`` in the least-significant bit.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence, Tuple

from .errors import DimensionError, DomainError

BitString = Tuple[int, ...]

#: Longest bit string accepted by :func:`encode_index`.
WORD_WIDTH = 63


def as_bits(bits: Sequence[int]) -> BitString:
    """Validate ``bits`` and return it as a tuple of ints."""
    out = tuple(int(b) for b in bits)
    if not out:
        raise DomainError("bit string must have length >= 1")
    if any(b not in (0, 1) for b in out):
        raise DomainError(f"bit string {bits!r} contains values other than 0/1")
    return out


def dot_mod2(k: Sequence[int], x: Sequence[int]) -> int:
    """Return ``k_1 x_1 xor ... xor k_n x_n``.

    ``x`` has length ``n + 1``; its bit ``x_0`` never contributes.
    """
    if len(x) != len(k) + 1:
        raise DimensionError(
            f"dot_mod2 needs len(x) == len(k) + 1, got len(k)={len(k)}, len(x)={len(x)}"
        )
    acc = 0
    for kj, xj in zip(k, x[1:]):
        acc ^= kj & xj
    return acc


def xor_bits(a: Sequence[int], b: Sequence[int]) -> BitString:
    if len(a) != len(b):
        raise DimensionError(f"cannot xor strings of lengths {len(a)} and {len(b)}")
    return tuple(x ^ y for x, y in zip(a, b))


def encode_index(bits: Sequence[int]) -> int:
    """Integer index of ``bits`` with ``x_0`` as the least-significant bit."""
    if len(bits) > WORD_WIDTH:
        raise DomainError(f"bit string longer than {WORD_WIDTH} bits")
    i = 0
    for j, b in enumerate(bits):
        i |= (b & 1) << j
    return i


def decode_index(i: int, m: int) -> BitString:
    """Inverse of :func:`encode_index` for strings of length ``m``."""
    if m < 1 or m > WORD_WIDTH:
        raise DomainError(f"length must be in 1..{WORD_WIDTH}, got {m}")
    if not 0 <= i < (1 << m):
        raise DomainError(f"index {i} out of range for {m} bits")
    return tuple((i >> j) & 1 for j in range(m))


def parse_bits(text: str) -> BitString:
    """Parse ``"101"`` into ``(1, 0, 1)``; characters are read left to right.

    For an oracle input this means ``x_0 x_1 ... x_n``; for a hidden string
    it means ``k_1 ... k_n``.
    """
    text = text.strip()
    if not text or any(c not in "01" for c in text):
        raise DomainError(f"not a bit string: {text!r}")
    return tuple(int(c) for c in text)


def format_bits(bits: Sequence[int]) -> str:
    return "".join(str(b) for b in bits)


def all_strings(n: int) -> Iterator[BitString]:
    """All ``n``-bit strings in lexicographic order of their text form."""
    return itertools.product((0, 1), repeat=n)


def unit_string(n: int, j: int) -> BitString:
    """The hidden string ``e_j`` (1-based ``j``): only ``k_j`` is set."""
    if not 1 <= j <= n:
        raise DomainError(f"unit string index must be in 1..{n}, got {j}")
    return tuple(int(i == j - 1) for i in range(n))
