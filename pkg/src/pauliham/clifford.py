"""Tableau conjugation by H, S and CX, with circuit recording.

Phase updates read pre-update bit values throughout:

    H(i):      r ^= x_i z_i, then swap x_i and z_i
    S(i):      r ^= x_i z_i, then z_i ^= x_i
    CX(i, j):  r ^= x_i z_j (x_j ^ z_i ^ 1), then x_j ^= x_i, z_i ^= z_j

CZ and SWAP are composites (CZ = H_j CX(i,j) H_j, SWAP = CX(i,j) CX(j,i)
CX(i,j)) and are always recorded as their constituent primitives, so the
gate alphabet of a recorded circuit is exactly {H, S, CX}.

A :class:`CliffordCircuit` is an ordered list of segments.  Besides plain
primitive runs there are two structured segments whose gates all commute,
the S/CZ layer and the CX fan-out layer; they apply themselves to a
tableau in one fused pass (see :mod:`pauliham._kernels`) but expand to
ordinary primitives for the text dump and for equivalence tests.
"""

from __future__ import annotations

from collections import namedtuple

import numpy as np

from . import _kernels as kernels

H_CODE, S_CODE, CX_CODE = 0, 1, 2
_KIND_NAMES = {H_CODE: "H", S_CODE: "S", CX_CODE: "CX"}

Gate = namedtuple("Gate", ["kind", "i", "j"])
Gate.__doc__ = "One primitive gate; qubit indices are 0-based, j is None except for CX."


def _as_gate(code, a, b):
    if code == CX_CODE:
        return Gate("CX", int(a), int(b))
    return Gate(_KIND_NAMES[code], int(a), None)


class GateRun:
    """A plain sequence of primitive gates, stored as an (m, 3) array."""

    def __init__(self, ops):
        arr = np.asarray(ops, dtype=np.int64)
        if arr.size == 0:
            arr = np.zeros((0, 3), np.int64)
        if arr.ndim != 2 or arr.shape[1] != 3:
            raise ValueError("ops must be (m, 3) rows of (code, a, b)")
        self.ops = arr

    def apply(self, tab) -> None:
        if self.ops.shape[0]:
            kernels.apply_gates(tab.phase, tab.x, tab.z, tab.n, self.ops)

    def inverse(self) -> "GateRun":
        out = []
        for code, a, b in self.ops[::-1]:
            if code == S_CODE:  # S^-1 = S S S
                out.extend([(S_CODE, a, b)] * 3)
            else:
                out.append((code, a, b))
        return GateRun(out)

    def primitive_count(self) -> int:
        return int(self.ops.shape[0])

    def gates(self):
        for code, a, b in self.ops:
            yield _as_gate(code, a, b)


class DiagonalLayer:
    """Commuting layer of S gates and CZ composites on qubits [0, k).

    ``theta`` is a symmetric 0/1 matrix: S^s_power on qubit i for every
    theta[i][i] = 1, CZ(i, j) for every theta[i][j] = 1 with i < j.  All
    constituent gates are diagonal and commute, so the layer has a closed
    form for its action on a Pauli row; the inverse is the same layer
    with the S power flipped between 1 and 3 (CZ is self-inverse).
    """

    def __init__(self, theta, s_power=1):
        theta = np.ascontiguousarray(theta, dtype=np.uint8)
        if theta.ndim != 2 or theta.shape[0] != theta.shape[1]:
            raise ValueError("theta must be square")
        if not np.array_equal(theta, theta.T):
            raise ValueError("theta must be symmetric")
        if s_power not in (1, 3):
            raise ValueError("s_power must be 1 or 3")
        self.theta = theta
        self.s_power = int(s_power)

    def apply(self, tab) -> None:
        kernels.diagonal_layer(tab.phase, tab.x, tab.z, tab.n, self.theta, self.s_power)

    def inverse(self) -> "DiagonalLayer":
        return DiagonalLayer(self.theta, 4 - self.s_power)

    def primitive_count(self) -> int:
        diag = int(np.diagonal(self.theta).sum())
        edges = int(np.triu(self.theta, 1).sum())
        return self.s_power * diag + 3 * edges

    def gates(self):
        for i in np.nonzero(np.diagonal(self.theta))[0]:
            for _ in range(self.s_power):
                yield Gate("S", int(i), None)
        for i, j in np.argwhere(np.triu(self.theta, 1)):
            yield Gate("H", int(j), None)
            yield Gate("CX", int(i), int(j))
            yield Gate("H", int(j), None)


class CnotLayer:
    """Commuting layer of CX gates from qubits [0, k) onto [k, k + m).

    ``pattern[i][j] = 1`` contributes CX(control=i, target=k+j).  Controls
    and targets are disjoint, so all gates commute and the layer is its
    own inverse.
    """

    def __init__(self, pattern):
        pattern = np.ascontiguousarray(pattern, dtype=np.uint8)
        if pattern.ndim != 2:
            raise ValueError("pattern must be 2-d")
        self.pattern = pattern

    def apply(self, tab) -> None:
        kernels.cnot_layer(tab.phase, tab.x, tab.z, tab.n, self.pattern)

    def inverse(self) -> "CnotLayer":
        return CnotLayer(self.pattern)

    def primitive_count(self) -> int:
        return int(self.pattern.sum())

    def gates(self):
        k = self.pattern.shape[0]
        for i, j in np.argwhere(self.pattern):
            yield Gate("CX", int(i), int(k + j))


class CliffordCircuit:
    """Ordered gate record; invertible for witness back-transformation."""

    def __init__(self, segments=()):
        self.segments = list(segments)

    def append(self, segment) -> None:
        self.segments.append(segment)

    def apply_to(self, tab) -> None:
        for seg in self.segments:
            seg.apply(tab)

    def inverse(self) -> "CliffordCircuit":
        return CliffordCircuit(seg.inverse() for seg in reversed(self.segments))

    def primitive_count(self) -> int:
        return sum(seg.primitive_count() for seg in self.segments)

    def gates(self):
        for seg in self.segments:
            yield from seg.gates()

    def format_text(self) -> str:
        """One primitive per line, 1-based qubit indices."""
        lines = []
        for gate in self.gates():
            if gate.kind == "CX":
                lines.append(f"CX {gate.i + 1} {gate.j + 1}")
            else:
                lines.append(f"{gate.kind} {gate.i + 1}")
        return "\n".join(lines) + ("\n" if lines else "")

    def __len__(self):
        return len(self.segments)


def cz_ops(i: int, j: int):
    """Primitive (code, a, b) rows realizing CZ(i, j)."""
    if i == j:
        raise ValueError("CZ needs two distinct qubits")
    return [(H_CODE, j, 0), (CX_CODE, i, j), (H_CODE, j, 0)]


def swap_ops(i: int, j: int):
    """Primitive rows realizing SWAP(i, j); a palindrome, self-inverse."""
    if i == j:
        raise ValueError("SWAP needs two distinct qubits")
    return [(CX_CODE, i, j), (CX_CODE, j, i), (CX_CODE, i, j)]


def _check_qubit(tab, i):
    if not 0 <= i < tab.n:
        raise ValueError(f"qubit index {i} out of range for n={tab.n}")


def apply_h(tab, i: int) -> None:
    _check_qubit(tab, i)
    GateRun([(H_CODE, i, 0)]).apply(tab)


def apply_s(tab, i: int) -> None:
    _check_qubit(tab, i)
    GateRun([(S_CODE, i, 0)]).apply(tab)


def apply_cx(tab, i: int, j: int) -> None:
    _check_qubit(tab, i)
    _check_qubit(tab, j)
    if i == j:
        raise ValueError("CX needs two distinct qubits")
    GateRun([(CX_CODE, i, j)]).apply(tab)


def apply_cz(tab, i: int, j: int) -> None:
    _check_qubit(tab, i)
    _check_qubit(tab, j)
    GateRun(cz_ops(i, j)).apply(tab)


def apply_swap(tab, i: int, j: int) -> None:
    _check_qubit(tab, i)
    _check_qubit(tab, j)
    GateRun(swap_ops(i, j)).apply(tab)


def apply_circuit(tab, circuit: CliffordCircuit) -> None:
    circuit.apply_to(tab)


def invert(circuit: CliffordCircuit) -> CliffordCircuit:
    """Reverse the gate order, replacing each S by S S S (= S-dagger)."""
    return circuit.inverse()
