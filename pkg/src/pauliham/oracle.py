"""Brute-force ground truth at desk scale.

Everything here is exact: dense operators are Gaussian-integer matrices
stored as separate int64 real/imaginary planes, so equality checks and
traces are integer comparisons, never tolerances.
"""

from __future__ import annotations

import numpy as np

from . import bits
from .errors import ClosureBoundError, OracleLimitError, PromiseViolationError
from .pauli import PauliWord, multiply, symplectic_inner

DEFAULT_DENSE_LIMIT = 10
_MAX_PROJECTOR_TERMS = 50  # entry bound 2^r must stay inside int64


class DenseOperator:
    """Square matrix over the Gaussian integers (int64 re/im planes)."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        re = np.asarray(re, dtype=np.int64)
        im = np.asarray(im, dtype=np.int64)
        if re.shape != im.shape or re.ndim != 2 or re.shape[0] != re.shape[1]:
            raise ValueError("re/im must be equal-shape square matrices")
        self.re = re
        self.im = im

    @classmethod
    def identity(cls, dim: int) -> "DenseOperator":
        return cls(np.eye(dim, dtype=np.int64), np.zeros((dim, dim), np.int64))

    @property
    def dim(self) -> int:
        return self.re.shape[0]

    def __matmul__(self, other):
        # Pauli-word matrices have a single nonzero plane; skipping the
        # all-zero products keeps this exact and much cheaper.
        s_re, s_im = bool(self.re.any()), bool(self.im.any())
        o_re, o_im = bool(other.re.any()), bool(other.im.any())
        re = im = None
        if s_re and o_re:
            re = self.re @ other.re
        if s_im and o_im:
            term = self.im @ other.im
            re = -term if re is None else re - term
        if s_re and o_im:
            im = self.re @ other.im
        if s_im and o_re:
            term = self.im @ other.re
            im = term if im is None else im + term
        shape = (self.re.shape[0], other.re.shape[1])
        if re is None:
            re = np.zeros(shape, np.int64)
        if im is None:
            im = np.zeros(shape, np.int64)
        return DenseOperator(re, im)

    def __add__(self, other):
        return DenseOperator(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return DenseOperator(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return DenseOperator(-self.re, -self.im)

    def __rmul__(self, scalar: int):
        return DenseOperator(scalar * self.re, scalar * self.im)

    def dagger(self) -> "DenseOperator":
        return DenseOperator(self.re.T.copy(), -self.im.T.copy())

    def trace(self) -> tuple[int, int]:
        """(real, imaginary) parts of the trace, as Python ints."""
        return int(self.re.trace()), int(self.im.trace())

    def __eq__(self, other):
        if not isinstance(other, DenseOperator):
            return NotImplemented
        return np.array_equal(self.re, other.re) and np.array_equal(self.im, other.im)

    def __repr__(self):
        return f"DenseOperator(dim={self.dim})"


def kron(a: DenseOperator, b: DenseOperator) -> DenseOperator:
    a_re, a_im = bool(a.re.any()), bool(a.im.any())
    b_re, b_im = bool(b.re.any()), bool(b.im.any())
    re = im = None
    if a_re and b_re:
        re = np.kron(a.re, b.re)
    if a_im and b_im:
        term = np.kron(a.im, b.im)
        re = -term if re is None else re - term
    if a_re and b_im:
        im = np.kron(a.re, b.im)
    if a_im and b_re:
        term = np.kron(a.im, b.re)
        im = term if im is None else im + term
    dim = a.dim * b.dim
    if re is None:
        re = np.zeros((dim, dim), np.int64)
    if im is None:
        im = np.zeros((dim, dim), np.int64)
    return DenseOperator(re, im)


_SINGLE = {
    "I": DenseOperator([[1, 0], [0, 1]], [[0, 0], [0, 0]]),
    "X": DenseOperator([[0, 1], [1, 0]], [[0, 0], [0, 0]]),
    "Y": DenseOperator([[0, 0], [0, 0]], [[0, -1], [1, 0]]),
    "Z": DenseOperator([[1, 0], [0, -1]], [[0, 0], [0, 0]]),
}


def single_qubit(letter: str) -> DenseOperator:
    """The 2x2 matrix of I, X, Y or Z."""
    return _SINGLE[letter]


def dense(w: PauliWord, limit: int = DEFAULT_DENSE_LIMIT) -> DenseOperator:
    """(-1)^phase times the Kronecker product of the per-qubit matrices.

    Qubit 1 is the outermost Kronecker factor, i.e. the most significant
    bit of the basis index.
    """
    if w.n > limit:
        raise OracleLimitError(f"dense operator for n={w.n} exceeds limit {limit}")
    xb = w.x_bits()
    zb = w.z_bits()
    out = _SINGLE["IXZY"[int(xb[0]) + 2 * int(zb[0])]]
    for i in range(1, w.n):
        out = kron(out, _SINGLE["IXZY"[int(xb[i]) + 2 * int(zb[i])]])
    if w.phase:
        out = -out
    return out


def _masks(w: PauliWord) -> tuple[int, int]:
    """Basis-index bit masks for the X and Z supports (qubit i -> bit n-i)."""
    xm = zm = 0
    for i, (x, z) in enumerate(zip(w.x_bits(), w.z_bits())):
        pos = w.n - 1 - i
        if x:
            xm |= 1 << pos
        if z:
            zm |= 1 << pos
    return xm, zm


def apply_word(w: PauliWord, op: DenseOperator) -> DenseOperator:
    """dense(w) @ op without building dense(w).

    A signed Pauli word acts on basis states as a signed permutation:
    ``S|b> = (-1)^p * i^{#Y} * (-1)^{|b & zmask|} |b ^ xmask>``, so the
    product is a row permutation with per-row phases.  Exact integers
    throughout; used to keep the projector-trace oracle fast.
    """
    xm, zm = _masks(w)
    dim = op.dim
    idx = np.arange(dim, dtype=np.uint64) ^ np.uint64(xm)
    par = bits.popcount(idx & np.uint64(zm)) & np.uint64(1)
    sign = (1 - 2 * par.astype(np.int64))[:, None]
    if w.phase:
        sign = -sign
    idx = idx.astype(np.int64)
    re = sign * op.re[idx]
    im = sign * op.im[idx]
    y_count = int(bits.popcount(w.x & w.z).sum()) & 3
    if y_count == 0:
        return DenseOperator(re, im)
    if y_count == 1:
        return DenseOperator(-im, re)
    if y_count == 2:
        return DenseOperator(-re, -im)
    return DenseOperator(im, -re)


def _check_commuting(generators) -> None:
    gens = list(generators)
    for j in range(len(gens)):
        for k in range(j + 1, len(gens)):
            if symplectic_inner(gens[j], gens[k]):
                raise PromiseViolationError(
                    f"generators {j} and {k} anticommute", pairs=[(j, k)]
                )


def groundspace_dim(inst, limit: int = DEFAULT_DENSE_LIMIT) -> int:
    """Dimension of the common +1 eigenspace, by exact projector trace.

    Evaluates ``Tr prod_i (I + S_i) / 2^r``.  The projectors commute, so
    the result is a non-negative integer; it is > 0 exactly when a common
    +1 eigenstate exists.
    """
    gens = list(inst.generators)
    n = inst.n
    if n > limit:
        raise OracleLimitError(f"n={n} exceeds dense limit {limit}")
    if len(gens) > _MAX_PROJECTOR_TERMS:
        raise OracleLimitError(f"r={len(gens)} exceeds projector term limit")
    _check_commuting(gens)
    acc = DenseOperator.identity(2**n)
    for w in gens:
        acc = acc + apply_word(w, acc)
    tr_re, tr_im = acc.trace()
    if tr_im != 0:
        raise AssertionError("projector trace must be real")
    denom = 2 ** len(gens)
    if tr_re % denom or tr_re < 0:
        raise AssertionError("projector trace must be a non-negative multiple of 2^r")
    return tr_re // denom


def closure_contains_minus_identity(inst, bound: int = 1 << 20) -> bool:
    """Breadth-first closure of the signed group; True iff -I is reached."""
    gens = list(inst.generators)
    _check_commuting(gens)
    minus_identity = PauliWord(
        inst.n, 1, np.zeros(bits.n_words(inst.n), np.uint64),
        np.zeros(bits.n_words(inst.n), np.uint64),
    )
    start = PauliWord.identity(inst.n)
    seen = {start}
    frontier = [start]
    while frontier:
        word = frontier.pop()
        for gen in gens:
            new = multiply(word, gen)
            if new in seen:
                continue
            if new == minus_identity:
                return True
            if len(seen) >= bound:
                raise ClosureBoundError(f"closure exceeded bound {bound}")
            seen.add(new)
            frontier.append(new)
    return False


def stabilized_vector(words) -> np.ndarray:
    """Integer column vector fixed by every word in ``words`` (+1 eigenvalue).

    Builds the (unnormalized) projector product and returns its first
    nonzero column as an int64 complex pair stacked along axis 1.  Raises
    if the joint +1 eigenspace is empty.
    """
    words = list(words)
    if not words:
        raise ValueError("need at least one word")
    n = words[0].n
    acc = DenseOperator.identity(2**n)
    for w in words:
        acc = acc + apply_word(w, acc)
    nz = np.nonzero(acc.re.any(axis=0) | acc.im.any(axis=0))[0]
    if nz.size == 0:
        raise ValueError("words have no common +1 eigenstate")
    col = int(nz[0])
    return np.stack([acc.re[:, col], acc.im[:, col]], axis=1)


def word_fixes_vector(w: PauliWord, vec: np.ndarray) -> bool:
    """True when dense(w) @ vec == vec, exactly."""
    # apply_word expects a square operator; embed vec as the first column
    dim = vec.shape[0]
    re = np.zeros((dim, dim), np.int64)
    im = np.zeros((dim, dim), np.int64)
    re[:, 0] = vec[:, 0]
    im[:, 0] = vec[:, 1]
    out = apply_word(w, DenseOperator(re, im))
    return bool(
        np.array_equal(out.re[:, 0], vec[:, 0])
        and np.array_equal(out.im[:, 0], vec[:, 1])
    )
