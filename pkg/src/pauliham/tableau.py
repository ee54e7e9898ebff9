"""Instances and the phase-tracked generator tableau.

A :class:`Tableau` holds the r x (2n+1) binary matrix [R | A | B] of an
instance (phase column, X block, Z block) together with an r x r history
matrix over GF(2).  Row a of the history records which original input
generators multiply to the current row-a word, so every -I row doubles
as a checkable certificate and every verdict stays auditable.
"""

from __future__ import annotations

import io
import numpy as np

from . import _kernels as kernels
from . import bits
from .errors import CommutationError, InstanceFormatError
from .pauli import PauliWord, format_pauli, g_sum_packed, parse_pauli


class Instance:
    """A validated problem input: n qubits and r signed Pauli words.

    The pairwise-commutation promise is *not* enforced here; it is the
    solver's job to check it (violations are reportable data).
    """

    __slots__ = ("n", "generators", "label")

    def __init__(self, n, generators, label=""):
        generators = tuple(generators)
        if not generators:
            raise ValueError("an instance needs at least one generator")
        for w in generators:
            if w.n != n:
                raise ValueError(f"generator length {w.n} != n={n}")
        self.n = int(n)
        self.generators = generators
        self.label = str(label)

    @property
    def r(self) -> int:
        return len(self.generators)

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __repr__(self):
        return f"Instance(n={self.n}, r={self.r}, label={self.label!r})"


def validate_commuting(inst: Instance) -> list[tuple[int, int]]:
    """All 0-based index pairs (j, k), j < k, that fail to commute.

    An empty list means the instance satisfies the promise.
    """
    x, z = _pack_words(inst.generators, inst.n)
    return [tuple(p) for p in kernels.commuting_violations(x, z, inst.n)]


def _pack_words(words, n):
    r = len(words)
    x = bits.zero_words(r, n)
    z = bits.zero_words(r, n)
    for i, w in enumerate(words):
        x[i] = w.x
        z[i] = w.z
    return x, z


class Tableau:
    """Mutable [R | A | B] matrix plus the GF(2) history matrix.

    Attributes:
        n: qubit count.
        r: row count.
        r0: width of the history space (original generator count).
        phase: (r,) uint8 sign bits.
        x, z: (r, n_words(n)) packed uint64 bit blocks.
        hist: (r, n_words(r0)) packed uint64 history rows.
        row_ops: running count of row products applied.
    """

    def __init__(self, n, phase, x, z, hist, r0):
        self.n = int(n)
        self.phase = phase
        self.x = x
        self.z = z
        self.hist = hist
        self.r0 = int(r0)
        self.row_ops = 0

    @classmethod
    def from_instance(cls, inst: Instance) -> "Tableau":
        """Rows in input order; history starts as the identity."""
        x, z = _pack_words(inst.generators, inst.n)
        phase = np.array([w.phase for w in inst.generators], np.uint8)
        hist = bits.pack_bits(np.eye(inst.r, dtype=np.uint8))
        return cls(inst.n, phase, x, z, hist, inst.r)

    @classmethod
    def from_words(cls, words, n=None) -> "Tableau":
        words = list(words)
        if n is None:
            n = words[0].n
        return cls.from_instance(Instance(n, words))

    @property
    def r(self) -> int:
        return self.phase.shape[0]

    def copy(self) -> "Tableau":
        t = Tableau(
            self.n,
            self.phase.copy(),
            self.x.copy(),
            self.z.copy(),
            self.hist.copy(),
            self.r0,
        )
        t.row_ops = self.row_ops
        return t

    def word(self, a: int) -> PauliWord:
        return PauliWord(self.n, int(self.phase[a]), self.x[a], self.z[a])

    def words(self) -> list[PauliWord]:
        return [self.word(a) for a in range(self.r)]

    def history_selection(self, a: int) -> tuple[int, ...]:
        """0-based original generator indices whose product is row a."""
        sel = bits.unpack_bits(self.hist[a], self.r0)
        return tuple(int(i) for i in np.nonzero(sel)[0])

    def row_mult(self, j: int, k: int) -> None:
        """Replace row k by the product of rows j and k (j unchanged).

        History row k picks up history row j.  Raises
        :class:`CommutationError` when the rows anticommute (mod-4 phase
        sum odd), which only happens on promise-violating input.
        """
        if j == k:
            raise ValueError("row_mult needs two distinct rows")
        t = (
            2 * int(self.phase[j])
            + 2 * int(self.phase[k])
            + g_sum_packed(self.x[j], self.z[j], self.x[k], self.z[k])
        )
        if t & 1:
            raise CommutationError(f"rows {j} and {k} anticommute")
        self.phase[k] = (t & 3) >> 1
        self.x[k] ^= self.x[j]
        self.z[k] ^= self.z[j]
        self.hist[k] ^= self.hist[j]
        self.row_ops += 1

    def swap_rows(self, j: int, k: int) -> None:
        if j == k:
            return
        for m in (self.phase, self.x, self.z, self.hist):
            m[[j, k]] = m[[k, j]]

    def find_minus_identity(self):
        """Index of any -I row (zero symplectic part, phase 1), or None."""
        row = kernels.scan_minus_rows(self.phase, self.x, self.z)
        return None if row < 0 else int(row)

    def x_bits(self) -> np.ndarray:
        return bits.unpack_bits(self.x, self.n)

    def z_bits(self) -> np.ndarray:
        return bits.unpack_bits(self.z, self.n)

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.phase, other.phase)
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
            and np.array_equal(self.hist, other.hist)
        )

    def __repr__(self):
        return f"Tableau(n={self.n}, r={self.r})"


# ---------------------------------------------------------------------------
# Instance file format: '#' comments, 'n <int>' header, one word per line.
# ---------------------------------------------------------------------------


def parse_instance(text: str, label="") -> Instance:
    """Parse the line-oriented instance format.

    Lines starting with '#' (and blank lines) are ignored; the first
    significant line must be ``n <integer>``; every following significant
    line is one Pauli word in the ``sign letter{n}`` grammar.
    """
    n = None
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n":
                raise InstanceFormatError(
                    f"expected 'n <integer>' header, got {line!r}", line=lineno
                )
            try:
                n = int(parts[1])
            except ValueError:
                raise InstanceFormatError(
                    f"invalid qubit count {parts[1]!r}", line=lineno
                ) from None
            if n < 1:
                raise InstanceFormatError("qubit count must be positive", line=lineno)
            continue
        try:
            words.append(parse_pauli(line, n))
        except Exception as exc:
            raise InstanceFormatError(str(exc), line=lineno) from None
    if n is None:
        raise InstanceFormatError("missing 'n <integer>' header")
    if not words:
        raise InstanceFormatError("instance has no generators")
    return Instance(n, words, label=label)


def format_instance(inst: Instance, comments=()) -> str:
    """Serialize an instance; inverse of :func:`parse_instance`."""
    out = io.StringIO()
    for c in comments:
        out.write(f"# {c}\n")
    out.write(f"n {inst.n}\n")
    for w in inst.generators:
        out.write(format_pauli(w) + "\n")
    return out.getvalue()


def read_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read(), label=str(path))


def write_instance(path, inst: Instance, comments=()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_instance(inst, comments))
