"""Bit-vectors packed into little-endian uint64 words.

Every bit-vector of length ``n`` is stored as ``ceil(n / 64)`` words with
bit ``i`` at word ``i // 64``, position ``i % 64``.  Trailing padding bits
above ``n`` are always zero; operations in this package rely on that and
preserve it.
"""

from __future__ import annotations

import numpy as np

WORD_BITS = 64


def n_words(n_bits: int) -> int:
    """Number of uint64 words needed for ``n_bits`` bits."""
    return (n_bits + WORD_BITS - 1) // WORD_BITS


def pack_bits(bits) -> np.ndarray:
    """Pack a 0/1 array (last axis = bit index) into uint64 words."""
    bits = np.ascontiguousarray(bits, dtype=np.uint8)
    n = bits.shape[-1]
    w = n_words(n)
    pad = w * WORD_BITS - n
    if pad:
        bits = np.concatenate(
            [bits, np.zeros(bits.shape[:-1] + (pad,), np.uint8)], axis=-1
        )
    packed = np.packbits(bits, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64)


def unpack_bits(words, n_bits: int) -> np.ndarray:
    """Inverse of :func:`pack_bits`; returns a uint8 0/1 array."""
    words = np.ascontiguousarray(words, dtype=np.uint64)
    as_bytes = words.view(np.uint8)
    return np.unpackbits(as_bytes, axis=-1, bitorder="little", count=n_bits)


def zero_words(shape, n_bits: int) -> np.ndarray:
    """Allocate packed storage for ``shape + (n_bits,)`` bit-vectors."""
    if isinstance(shape, int):
        shape = (shape,)
    return np.zeros(tuple(shape) + (n_words(n_bits),), dtype=np.uint64)


def get_bit(words, i: int):
    """Bit ``i`` from packed words; vectorized over leading axes."""
    return (words[..., i >> 6] >> np.uint64(i & 63)) & np.uint64(1)


def set_bit(words, i: int) -> None:
    words[..., i >> 6] |= np.uint64(1) << np.uint64(i & 63)


def xor_bit(words, i: int, vals) -> None:
    """XOR 0/1 ``vals`` into bit ``i``; vectorized over leading axes."""
    words[..., i >> 6] ^= np.asarray(vals, np.uint64) << np.uint64(i & 63)


def popcount(words) -> np.ndarray:
    """Per-word population count (numpy >= 2 has a native ufunc)."""
    return np.bitwise_count(words)


def parity(words, axis=-1) -> np.ndarray:
    """Parity of all bits along ``axis``."""
    return (np.bitwise_count(words).sum(axis=axis) & 1).astype(np.uint8)


def padding_is_zero(words, n_bits: int) -> bool:
    """True when every bit above ``n_bits`` is clear (storage invariant)."""
    words = np.asarray(words, dtype=np.uint64)
    if words.shape[-1] != n_words(n_bits):
        return False
    rem = n_bits & 63
    if rem == 0 or words.shape[-1] == 0:
        return True
    mask = ~((np.uint64(1) << np.uint64(rem)) - np.uint64(1))
    return not np.any(words[..., -1] & mask)
