"""Signed Pauli words in the binary symplectic representation.

A word on ``n`` qubits is ``(-1)^p * P(x_1, z_1) x ... x P(x_n, z_n)`` with

    ==========  =====
    (x, z)      P
    ==========  =====
    (0, 0)      I
    (1, 0)      X
    (1, 1)      Y
    (0, 1)      Z
    ==========  =====

Every such word squares to the identity, so the only global phases are
+1 and -1, carried by the single bit ``p``.  The x/z bit-vectors are
packed into uint64 words (see :mod:`pauliham.bits`).
"""

from __future__ import annotations

import numpy as np

from . import bits
from .errors import CommutationError, PauliSyntaxError

_LETTERS = "IXZY"  # index = x + 2*z


class PauliWord:
    """One signed Pauli word; immutable after construction.

    Attributes:
        n: qubit count (>= 1).
        phase: sign bit, 0 for +1 and 1 for -1.
        x: packed X bit-vector, shape ``(n_words(n),)`` uint64.
        z: packed Z bit-vector, same shape.
    """

    __slots__ = ("n", "phase", "x", "z")

    def __init__(self, n, phase, x, z):
        if n < 1:
            raise ValueError("qubit count must be positive")
        if phase not in (0, 1):
            raise ValueError("phase bit must be 0 or 1")
        x = np.ascontiguousarray(x, dtype=np.uint64)
        z = np.ascontiguousarray(z, dtype=np.uint64)
        w = bits.n_words(n)
        if x.shape != (w,) or z.shape != (w,):
            raise ValueError(f"packed vectors must have shape ({w},)")
        if not (bits.padding_is_zero(x, n) and bits.padding_is_zero(z, n)):
            raise ValueError("padding bits above n must be zero")
        x = x.copy()
        z = z.copy()
        x.setflags(write=False)
        z.setflags(write=False)
        self_set = super().__setattr__
        self_set("n", int(n))
        self_set("phase", int(phase))
        self_set("x", x)
        self_set("z", z)

    def __setattr__(self, name, value):
        raise AttributeError("PauliWord is immutable")

    @classmethod
    def from_bits(cls, phase, x_bits, z_bits) -> "PauliWord":
        """Build from 0/1 sequences for the X and Z components."""
        x_bits = np.asarray(x_bits, dtype=np.uint8)
        z_bits = np.asarray(z_bits, dtype=np.uint8)
        if x_bits.shape != z_bits.shape or x_bits.ndim != 1:
            raise ValueError("x and z bit-vectors must be 1-d and equal length")
        return cls(x_bits.size, phase, bits.pack_bits(x_bits), bits.pack_bits(z_bits))

    @classmethod
    def identity(cls, n: int) -> "PauliWord":
        w = bits.n_words(n)
        return cls(n, 0, np.zeros(w, np.uint64), np.zeros(w, np.uint64))

    def x_bits(self) -> np.ndarray:
        return bits.unpack_bits(self.x, self.n)

    def z_bits(self) -> np.ndarray:
        return bits.unpack_bits(self.z, self.n)

    def is_identity(self) -> bool:
        return not (self.x.any() or self.z.any())

    def __eq__(self, other):
        if not isinstance(other, PauliWord):
            return NotImplemented
        return (
            self.n == other.n
            and self.phase == other.phase
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )

    def __hash__(self):
        return hash((self.n, self.phase, self.x.tobytes(), self.z.tobytes()))

    def __repr__(self):
        return f"PauliWord({format_pauli(self)!r})"


def g(x1: int, z1: int, x2: int, z2: int) -> int:
    """Per-qubit phase exponent of a product, in {-1, 0, +1}.

    Case table, with (x1, z1) selecting the row:
        (0, 0) -> 0
        (1, 1) -> z2 - x2
        (1, 0) -> z2 * (2*x2 - 1)
        (0, 1) -> x2 * (1 - 2*z2)
    """
    if x1 == 0 and z1 == 0:
        return 0
    if x1 == 1 and z1 == 1:
        return z2 - x2
    if x1 == 1 and z1 == 0:
        return z2 * (2 * x2 - 1)
    return x2 * (1 - 2 * z2)


def g_sum_packed(x1, z1, x2, z2) -> int:
    """Sum of :func:`g` over all qubits, computed on packed vectors.

    g is +1 exactly on qubit pairs (Y,Z), (X,Y), (Z,X) and -1 on the
    reversed pairs, so the sum is a difference of two popcounts.  Every
    AND below has at least one operand built without negation, which
    keeps padding bits out of the counts.
    """
    xo1 = x1 & ~z1  # X positions of the left word
    yo1 = x1 & z1
    zo1 = ~x1 & z1
    xo2 = x2 & ~z2
    yo2 = x2 & z2
    zo2 = ~x2 & z2
    plus = (yo1 & zo2) | (xo1 & yo2) | (zo1 & xo2)
    minus = (yo1 & xo2) | (xo1 & zo2) | (zo1 & yo2)
    return int(bits.popcount(plus).sum()) - int(bits.popcount(minus).sum())


def symplectic_inner(a: PauliWord, b: PauliWord) -> int:
    """Symplectic inner product mod 2; 0 iff the words commute."""
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    return int(bits.parity(a.x & b.z) ^ bits.parity(b.x & a.z))


def multiply(a: PauliWord, b: PauliWord) -> PauliWord:
    """Product of two commuting words, phase tracked exactly.

    The sign comes from ``t = 2*a.phase + 2*b.phase + sum_i g(...)``,
    which is 0 or 2 mod 4 for commuting inputs; an odd value signals an
    anticommuting pair and raises :class:`CommutationError`.
    """
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    t = 2 * a.phase + 2 * b.phase + g_sum_packed(a.x, a.z, b.x, b.z)
    if t & 1:
        raise CommutationError("product of anticommuting words is not a signed word")
    return PauliWord(a.n, (t & 3) >> 1, a.x ^ b.x, a.z ^ b.z)


def parse_pauli(text: str, n: int) -> PauliWord:
    """Parse ``sign letter{n}`` with sign in ``+-`` and letters in IXYZ.

    Raises:
        PauliSyntaxError: bad sign, bad letter, wrong length, or an
            explicit imaginary phase (words here square to identity).
    """
    if not text:
        raise PauliSyntaxError("empty Pauli word")
    sign = text[0]
    if sign in "ij" or text[:2] in ("+i", "-i", "+j", "-j"):
        raise PauliSyntaxError("imaginary phases are not representable")
    if sign not in "+-":
        raise PauliSyntaxError(f"expected sign '+' or '-', got {sign!r}")
    body = text[1:]
    if len(body) != n:
        raise PauliSyntaxError(f"expected {n} Pauli letters, got {len(body)}")
    x = np.zeros(n, np.uint8)
    z = np.zeros(n, np.uint8)
    for i, ch in enumerate(body):
        idx = _LETTERS.find(ch)
        if idx < 0:
            raise PauliSyntaxError(f"invalid Pauli letter {ch!r} at position {i + 1}")
        x[i] = idx & 1
        z[i] = idx >> 1
    return PauliWord(n, 0 if sign == "+" else 1, bits.pack_bits(x), bits.pack_bits(z))


def format_pauli(w: PauliWord) -> str:
    """Inverse of :func:`parse_pauli`; round-trips exactly."""
    xb = w.x_bits()
    zb = w.z_bits()
    letters = "".join(_LETTERS[int(x) + 2 * int(z)] for x, z in zip(xb, zb))
    return ("-" if w.phase else "+") + letters
