"""Shared test helpers: exact dense gate matrices and random generators.

The dense side avoids floating point entirely.  Gates with a 1/sqrt(2)
normalization (Hadamard) are represented by their integer multiples, and
conjugation checks carry the squared scale on the tableau side:

    G~ . dense(w) . G~^dagger == scale2 * dense(apply_gate(w))
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from pauliham import PauliWord, Tableau
from pauliham.oracle import DenseOperator, dense, kron

_ZERO2 = [[0, 0], [0, 0]]

IDENTITY_2 = DenseOperator([[1, 0], [0, 1]], _ZERO2)
# sqrt(2) * H is an integer matrix; conjugating with it doubles the result
HADAMARD_SCALED = DenseOperator([[1, 1], [1, -1]], _ZERO2)
S_MATRIX = DenseOperator([[1, 0], [0, 0]], [[0, 0], [0, 1]])

# Basis convention: qubit 1 is the most significant index bit.
CX_01 = DenseOperator(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], np.zeros((4, 4), int)
)
CX_10 = DenseOperator(
    [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], np.zeros((4, 4), int)
)
CZ_2Q = DenseOperator(np.diag([1, 1, 1, -1]), np.zeros((4, 4), int))
SWAP_2Q = DenseOperator(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], np.zeros((4, 4), int)
)


def embed_1q(gate: DenseOperator, n: int, qubit: int) -> DenseOperator:
    """Kron the 1-qubit gate into an n-qubit system at the given position."""
    out = gate if qubit == 0 else IDENTITY_2
    for q in range(1, n):
        out = kron(out, gate if q == qubit else IDENTITY_2)
    return out


def conjugation_matches(
    gate: DenseOperator, word: PauliWord, expected: PauliWord, scale2: int = 1
) -> bool:
    """Exact check of gate . dense(word) . gate^dagger == scale2 * dense(expected)."""
    lhs = gate @ dense(word) @ gate.dagger()
    rhs = scale2 * dense(expected)
    return lhs == rhs


def all_signed_words(n: int):
    """All 2 * 4^n signed words on n qubits."""
    for phase in (0, 1):
        for xz in itertools.product(range(4), repeat=n):
            x = np.array([v & 1 for v in xz], np.uint8)
            z = np.array([v >> 1 for v in xz], np.uint8)
            yield PauliWord.from_bits(phase, x, z)


def random_word(rng: np.random.Generator, n: int) -> PauliWord:
    return PauliWord.from_bits(
        int(rng.integers(0, 2)),
        rng.integers(0, 2, n, dtype=np.uint8),
        rng.integers(0, 2, n, dtype=np.uint8),
    )


def random_commuting_pair(rng: np.random.Generator, n: int):
    from pauliham import symplectic_inner

    while True:
        a = random_word(rng, n)
        b = random_word(rng, n)
        if symplectic_inner(a, b) == 0:
            return a, b


def single_row(word: PauliWord) -> Tableau:
    return Tableau.from_words([word])


def gf2_rank(mat: np.ndarray) -> int:
    """Independent dense GF(2) rank (reference implementation for tests)."""
    work = mat.astype(np.uint8).copy() & 1
    rank = 0
    rows, cols = work.shape
    for c in range(cols):
        piv = None
        for a in range(rank, rows):
            if work[a, c]:
                piv = a
                break
        if piv is None:
            continue
        work[[rank, piv]] = work[[piv, rank]]
        for a in range(rows):
            if a != rank and work[a, c]:
                work[a] ^= work[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def symplectic_rank(words) -> int:
    rows = np.array(
        [np.concatenate([w.x_bits(), w.z_bits()]) for w in words], np.uint8
    )
    return gf2_rank(rows)


@pytest.fixture
def rng():
    return np.random.default_rng(20250810)
