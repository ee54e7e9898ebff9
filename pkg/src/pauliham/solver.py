"""The decision pipeline.

Starting from M = [R | A | B], the solver reduces the instance through a
chain of equivalent forms:

    M1:  Gaussian elimination + column gathering + CX fan-out brings the
         X block to [I 0; 0 0] with I of rank k.
    M2:  commutation forces the lower-left Z block to zero and the k x k
         upper-left Z block B1 to be symmetric; one S/CZ layer clears B1.
    M3:  Hadamards on the last n - k qubits move the remaining Z data
         into the X block.
    M4:  a second elimination yields [R3 | I 0 | 0 0] with I of rank k'.

Any row that turns into -I along the way proves no common +1 eigenstate
exists, and its history row is the certificate.  Reaching M4 proves the
answer is YES: the final frame is stabilized by single-qubit +-X words,
and conjugating them (plus +Z fills on free qubits) back through the
recorded circuit yields witness generators for the original instance.

An independent second path, :func:`kernel_decide`, runs plain phase-tracked
elimination over all 2n symplectic columns with no Clifford gates at all
and must agree with :func:`decide` on every instance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as kernels
from . import bits
from .clifford import CliffordCircuit, CnotLayer, DiagonalLayer, GateRun, swap_ops
from .errors import PromiseViolationError
from .pauli import PauliWord, format_pauli, multiply, parse_pauli, symplectic_inner
from .tableau import Instance, Tableau, validate_commuting


class MinusIdentityFound(Exception):
    """Internal control flow: a -I row appeared at ``row``."""

    def __init__(self, row: int):
        super().__init__(f"-I row at index {row}")
        self.row = row


@dataclass(frozen=True)
class Verdict:
    """Outcome of a solve, with enough evidence to re-check it.

    YES verdicts carry n independent commuting witness generators whose
    joint +1 eigenstate satisfies every input generator; NO verdicts
    carry the 0-based input indices whose product is exactly -I.
    """

    answer: str
    n: int
    r: int
    k: int | None
    k_prime: int | None
    certificate: tuple[int, ...] | None
    witness: tuple[PauliWord, ...] | None
    gate_count: int
    row_op_count: int

    @property
    def is_yes(self) -> bool:
        return self.answer == "YES"

    def to_doc(self) -> dict:
        """JSON-ready document; certificate indices become 1-based."""
        return {
            "answer": self.answer,
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "k_prime": self.k_prime,
            "certificate": (
                None if self.certificate is None else [i + 1 for i in self.certificate]
            ),
            "witness": (
                None
                if self.witness is None
                else [format_pauli(w) for w in self.witness]
            ),
            "gate_count": self.gate_count,
            "row_op_count": self.row_op_count,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "Verdict":
        n = int(doc["n"])
        cert = doc.get("certificate")
        wit = doc.get("witness")
        return cls(
            answer=str(doc["answer"]),
            n=n,
            r=int(doc["r"]),
            k=doc.get("k"),
            k_prime=doc.get("k_prime"),
            certificate=None if cert is None else tuple(int(i) - 1 for i in cert),
            witness=None if wit is None else tuple(parse_pauli(s, n) for s in wit),
            gate_count=int(doc.get("gate_count", 0)),
            row_op_count=int(doc.get("row_op_count", 0)),
        )


def _require_commuting(inst: Instance) -> None:
    pairs = validate_commuting(inst)
    if pairs:
        j, k = pairs[0]
        count = len(pairs)
        detail = "1 bad pair" if count == 1 else f"{count} bad pairs"
        raise PromiseViolationError(
            f"instance violates the commutation promise: generators "
            f"{j + 1} and {k + 1} anticommute ({detail} total)",
            pairs=pairs,
        )


def _run_rref(tab: Tableau, col_lo: int, col_hi: int):
    pivots, stop_row, code, ops = kernels.rref(
        tab.phase, tab.x, tab.z, tab.hist, tab.n, col_lo, col_hi
    )
    tab.row_ops += int(ops)
    if code == 2:
        raise PromiseViolationError(
            f"rows anticommute during elimination (row {stop_row}); "
            "input cannot be pairwise commuting"
        )
    if code == 1:
        raise MinusIdentityFound(int(stop_row))
    return pivots


def gauss_x_block(tab: Tableau, circuit: CliffordCircuit, columns=None) -> int:
    """Bring the X block to [I 0; 0 0]; returns the rank k.

    Three tools, per the reduction's stability arguments: phase-tracked
    row products and row swaps, column gathering realized as recorded
    SWAP composites, and one commuting CX fan-out layer that clears the
    residual columns of the pivot rows.  Raises
    :class:`MinusIdentityFound` as soon as any row becomes -I.
    """
    if columns is None:
        columns = range(0, tab.n)
    if columns.start != 0 or columns.step != 1 or columns.stop > tab.n:
        raise ValueError("columns must be range(0, m) with m <= n")
    pivots = _run_rref(tab, 0, columns.stop)
    k = int(pivots.shape[0])
    # Gather pivot columns to the front.  Pivot columns are strictly
    # increasing, so the individual swaps never collide.
    ops = []
    for a in range(k):
        c = int(pivots[a])
        if c != a:
            ops.extend(swap_ops(a, c))
    if ops:
        run = GateRun(ops)
        circuit.append(run)
        run.apply(tab)
    # Clear what is left of the pivot rows beyond column k.
    if k and k < tab.n:
        residual = tab.x_bits()[:k, k:]
        if residual.any():
            layer = CnotLayer(residual)
            circuit.append(layer)
            layer.apply(tab)
    return k


def check_b2_zero(tab: Tableau, k: int) -> None:
    """Commutation consequence: rows below k carry no Z data in cols < k."""
    if k == 0 or k == tab.r:
        return
    zb = bits.unpack_bits(tab.z[k:], tab.n)[:, :k]
    if zb.any():
        row, col = np.argwhere(zb)[0]
        raise PromiseViolationError(
            f"B2 block is nonzero at row {k + int(row)}, column {int(col)}; "
            "input cannot be pairwise commuting"
        )


def clear_b1(tab: Tableau, circuit: CliffordCircuit, k: int):
    """Zero the k x k Z sub-block of the pivot rows with one S/CZ layer.

    B1 must be symmetric (another commutation consequence): S(i) clears
    an odd diagonal entry, CZ(i, j) a symmetric off-diagonal pair.  Works
    for any symmetric B1, singular or zero included.  Returns the
    recorded layer, or None when B1 is already zero.
    """
    if k == 0:
        return None
    b1 = bits.unpack_bits(tab.z[:k], tab.n)[:, :k]
    if not np.array_equal(b1, b1.T):
        raise PromiseViolationError(
            "B1 block is not symmetric; input cannot be pairwise commuting"
        )
    if not b1.any():
        return None
    layer = DiagonalLayer(b1)
    circuit.append(layer)
    layer.apply(tab)
    return layer


def hadamard_tail(tab: Tableau, circuit: CliffordCircuit, k: int):
    """H on the last n - k qubits; moves the trailing Z data into X."""
    ops = [(0, q, 0) for q in range(k, tab.n)]
    run = GateRun(ops)
    if ops:
        circuit.append(run)
        run.apply(tab)
    return run


def extract_witness(tab: Tableau, k_prime: int, circuit: CliffordCircuit):
    """Witness generators from the M4 frame, mapped back to the input frame.

    In the final frame the instance is generated by (-1)^{R3_a} X_a for
    a < k', and the free qubits are pinned by +Z_a (computational |0>).
    Conjugating all n generators through the inverse recorded circuit
    gives independent commuting words stabilizing a single state that
    every input generator fixes with eigenvalue +1.
    """
    n = tab.n
    phase = np.zeros(n, np.uint8)
    phase[:k_prime] = tab.phase[:k_prime]
    eye = bits.pack_bits(np.eye(n, dtype=np.uint8))
    x = eye.copy()
    z = eye.copy()
    x[k_prime:] = 0
    z[:k_prime] = 0
    wtab = Tableau(n, phase, x, z, bits.pack_bits(np.eye(n, dtype=np.uint8)), n)
    circuit.inverse().apply_to(wtab)
    return tuple(wtab.words())


def _no_verdict(inst: Instance, tab: Tableau, row: int, k, gate_count: int) -> Verdict:
    return Verdict(
        answer="NO",
        n=inst.n,
        r=inst.r,
        k=k,
        k_prime=None,
        certificate=tab.history_selection(row),
        witness=None,
        gate_count=gate_count,
        row_op_count=tab.row_ops,
    )


def decide(inst: Instance, validate: bool = True) -> Verdict:
    """Run the full M -> M4 reduction; YES with witness or NO with certificate.

    Raises :class:`PromiseViolationError` on non-commuting input instead
    of returning an answer (the problem is a promise problem).
    """
    if validate:
        _require_commuting(inst)
    tab = Tableau.from_instance(inst)
    circuit = CliffordCircuit()
    row = tab.find_minus_identity()
    if row is not None:
        return _no_verdict(inst, tab, row, None, 0)
    k = None
    try:
        k = gauss_x_block(tab, circuit)
        check_b2_zero(tab, k)
        clear_b1(tab, circuit, k)
        # The S/CZ clearing never touches the X block, so this pass has
        # nothing to do; it re-asserts the [I 0; 0 0] invariant cheaply.
        k2 = gauss_x_block(tab, circuit)
        if k2 != k:
            raise AssertionError("M2 re-elimination changed the X rank")
        hadamard_tail(tab, circuit, k)
        k_prime = gauss_x_block(tab, circuit)
    except MinusIdentityFound as stop:
        return _no_verdict(inst, tab, stop.row, k, circuit.primitive_count())
    witness = extract_witness(tab, k_prime, circuit)
    return Verdict(
        answer="YES",
        n=inst.n,
        r=inst.r,
        k=k,
        k_prime=k_prime,
        certificate=None,
        witness=witness,
        gate_count=circuit.primitive_count(),
        row_op_count=tab.row_ops,
    )


def kernel_decide(inst: Instance, validate: bool = True) -> Verdict:
    """Independent decision path: eliminate all 2n symplectic columns.

    Uses only phase-tracked row products and swaps (no Clifford gates).
    Every row whose symplectic part hits zero must carry phase 0; a
    phase-1 zero row is -I and settles the answer as NO.  Witness
    construction is out of scope for this path; it exists to cross-check
    :func:`decide`.
    """
    if validate:
        _require_commuting(inst)
    tab = Tableau.from_instance(inst)
    row = tab.find_minus_identity()
    if row is not None:
        return _no_verdict(inst, tab, row, None, 0)
    try:
        _run_rref(tab, 0, 2 * tab.n)
    except MinusIdentityFound as stop:
        return _no_verdict(inst, tab, stop.row, None, 0)
    return Verdict(
        answer="YES",
        n=inst.n,
        r=inst.r,
        k=None,
        k_prime=None,
        certificate=None,
        witness=None,
        gate_count=0,
        row_op_count=tab.row_ops,
    )


def verify_certificate(inst: Instance, indices) -> bool:
    """True iff the selected original generators multiply to exactly -I."""
    idx = sorted(set(int(i) for i in indices))
    if not idx or idx[0] < 0 or idx[-1] >= inst.r:
        return False
    acc = PauliWord.identity(inst.n)
    for i in idx:
        acc = multiply(acc, inst.generators[i])
    return acc.is_identity() and acc.phase == 1


def _sympl_rows(words, n):
    """Packed (x || z) 2n-bit row vectors."""
    rows = bits.zero_words(len(words), 2 * n)
    for i, w in enumerate(words):
        xb = np.concatenate([w.x_bits(), w.z_bits()])
        rows[i] = bits.pack_bits(xb)
    return rows


def verify_witness(inst: Instance, witness) -> bool:
    """Check that every input generator sits in the witness group with +1.

    Solves the GF(2) system expressing each generator's symplectic vector
    over the witness generators', then reconstructs the product of the
    selected witness words and compares it to the generator, phase
    included.  Also fails if the witness is not n independent pairwise
    commuting words.
    """
    witness = list(witness)
    n = inst.n
    if len(witness) != n or any(w.n != n for w in witness):
        return False
    for a in range(n):
        for b in range(a + 1, n):
            if symplectic_inner(witness[a], witness[b]):
                return False
    rows = _sympl_rows(witness, n)
    combos = bits.pack_bits(np.eye(n, dtype=np.uint8))
    # Row-reduce the witness vectors, remembering which words combine
    # into each pivot row.
    pivots = []  # (column, row_vec, combo_vec), columns strictly increasing
    for a in range(n):
        vec = rows[a].copy()
        cmb = combos[a].copy()
        for col, pvec, pcmb in pivots:
            if bits.get_bit(vec, col):
                vec ^= pvec
                cmb ^= pcmb
        nz = np.nonzero(bits.unpack_bits(vec, 2 * n))[0]
        if nz.size == 0:
            return False  # dependent witness, rank < n
        pivots.append((int(nz[0]), vec, cmb))
        pivots.sort(key=lambda t: t[0])
    for gen in inst.generators:
        vec = _sympl_rows([gen], n)[0]
        cmb = bits.zero_words(1, n)[0]
        for col, pvec, pcmb in pivots:
            if bits.get_bit(vec, col):
                vec ^= pvec
                cmb ^= pcmb
        if vec.any():
            return False  # generator outside the witness group
        acc = PauliWord.identity(n)
        for a in np.nonzero(bits.unpack_bits(cmb, n))[0]:
            acc = multiply(acc, witness[int(a)])
        if acc != gen:
            return False
    return True
