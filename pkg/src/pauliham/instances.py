"""Test and benchmark instance families.

Toric-code instances use a fixed edge numbering so emitted files are
stable: the 2L^2 qubits of an L x L periodic lattice are the horizontal
edges first (row-major, edge (r, c) runs east from vertex (r, c)), then
the vertical edges (edge (r, c) runs south from vertex (r, c)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as kernels
from . import bits
from .pauli import PauliWord
from .tableau import Instance


@dataclass(frozen=True)
class TorusLattice:
    """Edge indexing of an L x L periodic square lattice."""

    L: int

    @property
    def n_qubits(self) -> int:
        return 2 * self.L * self.L

    def horizontal(self, r: int, c: int) -> int:
        return (r % self.L) * self.L + (c % self.L)

    def vertical(self, r: int, c: int) -> int:
        return self.L * self.L + (r % self.L) * self.L + (c % self.L)

    def star_edges(self, r: int, c: int) -> tuple[int, int, int, int]:
        """The 4 edges meeting vertex (r, c)."""
        return (
            self.horizontal(r, c),
            self.horizontal(r, c - 1),
            self.vertical(r, c),
            self.vertical(r - 1, c),
        )

    def plaquette_edges(self, r: int, c: int) -> tuple[int, int, int, int]:
        """The 4 edges bounding the face whose top-left vertex is (r, c)."""
        return (
            self.horizontal(r, c),
            self.horizontal(r + 1, c),
            self.vertical(r, c),
            self.vertical(r, c + 1),
        )


def _support_word(n, edges, kind) -> PauliWord:
    v = np.zeros(n, np.uint8)
    v[list(edges)] = 1
    zero = np.zeros(n, np.uint8)
    if kind == "X":
        return PauliWord.from_bits(0, v, zero)
    return PauliWord.from_bits(0, zero, v)


def toric_code(L: int) -> Instance:
    """L^2 weight-4 X stars and L^2 weight-4 Z plaquettes, all signs +.

    Stars come first (vertex-major), then plaquettes.  Any star and
    plaquette share 0 or 2 edges, so the set commutes by construction.
    """
    if L < 2:
        raise ValueError("toric code needs L >= 2")
    lat = TorusLattice(L)
    n = lat.n_qubits
    words = [
        _support_word(n, lat.star_edges(r, c), "X")
        for r in range(L)
        for c in range(L)
    ]
    words += [
        _support_word(n, lat.plaquette_edges(r, c), "Z")
        for r in range(L)
        for c in range(L)
    ]
    return Instance(n, words, label=f"generator=toric L={L}")


def toric_code_flipped(L: int, which: int) -> Instance:
    """Toric code with one generator's sign negated (0-based index).

    The product of all stars (and of all plaquettes) is +I since every
    edge appears in exactly two of them, so one flipped sign turns that
    product into -I: a NO instance with a known certificate.
    """
    base = toric_code(L)
    if not 0 <= which < base.r:
        raise ValueError(f"flip index {which} out of range for r={base.r}")
    words = list(base.generators)
    w = words[which]
    words[which] = PauliWord(w.n, w.phase ^ 1, w.x, w.z)
    return Instance(base.n, words, label=f"generator=toric-flipped L={L} flip={which}")


def _row_reduce_with_combos(mat: np.ndarray):
    """GF(2) row reduction of a 0/1 matrix, tracking row combinations.

    Returns the kernel basis as pairs (combo, dependent_row): each combo
    is a 0/1 vector over the rows XOR-ing to zero, and dependent_row is
    the unique non-pivot row it contains.
    """
    rows, _ = mat.shape
    work = mat.astype(np.uint8).copy()
    combos = np.eye(rows, dtype=np.uint8)
    pivots = []  # (column, row_index)
    kernel = []
    for a in range(rows):
        for col, pa in pivots:
            if work[a, col]:
                work[a] ^= work[pa]
                combos[a] ^= combos[pa]
        nz = np.nonzero(work[a])[0]
        if nz.size == 0:
            kernel.append((combos[a].copy(), a))
        else:
            pivots.append((int(nz[0]), a))
            pivots.sort()
    return kernel


def _scramble_gate_count(n: int) -> int:
    return 3 * n * max(2, math.ceil(math.log2(n + 1)))


def random_commuting(n: int, r: int, seed: int, force=None) -> Instance:
    """Seeded random commuting instance; byte-identical for equal seeds.

    Construction: r random Z-type words with random signs; the kernel of
    the Z-vector matrix is adjusted so every dependent product is +I
    (``force="yes"``) or at least one is -I (``force="no"``); the whole
    set is then conjugated by a random H/S/CX circuit.  ``force=None``
    leaves the signs alone.  The label records the construction,
    including the RNG (numpy PCG64) and the gate count.
    """
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    if force not in (None, "yes", "no"):
        raise ValueError("force must be None, 'yes' or 'no'")
    rng = np.random.default_rng(seed)
    zmat = rng.integers(0, 2, size=(r, n), dtype=np.uint8)
    signs = rng.integers(0, 2, size=r, dtype=np.uint8)

    if force == "no":
        kernel = _row_reduce_with_combos(zmat)
        if not kernel:
            if r == 1:
                zmat[0] = 0  # the word itself becomes +-I
            else:
                subset = rng.integers(0, 2, size=r - 1, dtype=np.uint8)
                if not subset.any():
                    subset[int(rng.integers(0, r - 1))] = 1
                mixed = subset.astype(np.int64) @ zmat[: r - 1].astype(np.int64)
                zmat[r - 1] = (mixed & 1).astype(np.uint8)
            kernel = _row_reduce_with_combos(zmat)
        combo, dep = kernel[0]
        if int(combo.astype(np.int64) @ signs.astype(np.int64)) % 2 == 0:
            signs[dep] ^= 1
    elif force == "yes":
        for combo, dep in _row_reduce_with_combos(zmat):
            if int(combo.astype(np.int64) @ signs.astype(np.int64)) % 2 == 1:
                signs[dep] ^= 1

    phase = signs.copy()
    x = bits.zero_words(r, n)
    z = bits.pack_bits(zmat)

    m = _scramble_gate_count(n)
    kinds = rng.integers(0, 3 if n > 1 else 2, size=m)
    qa = rng.integers(0, n, size=m)
    qb = (qa + 1 + rng.integers(0, max(n - 1, 1), size=m)) % n
    gates = np.stack([kinds, qa, qb], axis=1).astype(np.int64)
    kernels.apply_gates(phase, x, z, n, gates)

    words = [PauliWord(n, int(phase[i]), x[i], z[i]) for i in range(r)]
    label = (
        f"generator=random n={n} r={r} seed={seed} "
        f"force={force or 'none'} rng=numpy-PCG64 gates={m}"
    )
    return Instance(n, words, label=label)
