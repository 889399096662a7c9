"""Packed-bitset rows over numpy uint64 words.

Bit j of a row lives in word j >> 6 at position j & 63.  All graph adjacency
in this package is stored this way; a 20 000-vertex graph costs ~50 MB instead
of the ~400 MB a bool matrix would take.
"""

from __future__ import annotations

import numpy as np

WORD = 64


def word_count(n: int) -> int:
    return max(1, (n + WORD - 1) // WORD)


def zeros(n_rows: int, n_bits: int) -> np.ndarray:
    return np.zeros((n_rows, word_count(n_bits)), dtype=np.uint64)


def set_bits(row: np.ndarray, idx: np.ndarray) -> None:
    """Set bits idx (int array) in a single packed row, in place."""
    if len(idx) == 0:
        return
    idx = np.asarray(idx, dtype=np.int64)
    np.bitwise_or.at(row, idx >> 6, np.uint64(1) << (idx & 63).astype(np.uint64))


def mask_of(idx: np.ndarray, n_bits: int) -> np.ndarray:
    """Packed row with exactly the bits in idx set."""
    row = np.zeros(word_count(n_bits), dtype=np.uint64)
    set_bits(row, np.asarray(idx, dtype=np.int64))
    return row


def full_mask(n_bits: int) -> np.ndarray:
    row = np.full(word_count(n_bits), ~np.uint64(0), dtype=np.uint64)
    tail = n_bits & 63
    if tail:
        row[-1] = (np.uint64(1) << np.uint64(tail)) - np.uint64(1)
    if n_bits == 0:
        row[:] = 0
    return row


def test_bit(row: np.ndarray, j: int) -> bool:
    return bool((row[j >> 6] >> np.uint64(j & 63)) & np.uint64(1))


def to_indices(row: np.ndarray, n_bits: int) -> np.ndarray:
    """Indices of set bits, ascending."""
    bytes_view = row.view(np.uint8)
    bits = np.unpackbits(bytes_view, bitorder="little", count=n_bits)
    return np.flatnonzero(bits)


def popcount(row: np.ndarray) -> int:
    return int(np.unpackbits(row.view(np.uint8), bitorder="little").sum())


def popcount_rows(rows: np.ndarray) -> np.ndarray:
    """Per-row popcounts of a packed matrix."""
    bits = np.unpackbits(rows.view(np.uint8), axis=1, bitorder="little")
    return bits.sum(axis=1)


def pack_bool_matrix(mat: np.ndarray) -> np.ndarray:
    """Pack a bool matrix (rows of n bits) into uint64 words."""
    n_rows, n_bits = mat.shape
    w = word_count(n_bits)
    packed8 = np.packbits(mat, axis=1, bitorder="little")
    out8 = np.zeros((n_rows, w * 8), dtype=np.uint8)
    out8[:, : packed8.shape[1]] = packed8
    return out8.view(np.uint64)


def unpack_rows(rows: np.ndarray, n_bits: int) -> np.ndarray:
    """Unpack packed rows into a bool matrix with n_bits columns."""
    return np.unpackbits(rows.view(np.uint8), axis=1, bitorder="little", count=n_bits).astype(bool)


def rows_to_ints(rows: np.ndarray) -> list[int]:
    """Convert packed rows to Python integers (for the no-jit kernel path)."""
    return [int.from_bytes(r.tobytes(), "little") for r in rows]


def int_to_row(x: int, n_bits: int) -> np.ndarray:
    w = word_count(n_bits)
    return np.frombuffer(x.to_bytes(w * 8, "little"), dtype=np.uint64).copy()
