"""Backend dispatch for the hot kernels.

Two interchangeable implementations exist: numba-jitted loops
(:mod:`pauliham._kernels_nb`) and pure numpy (:mod:`pauliham._kernels_np`).
The active one is chosen at import time from the ``PAULIHAM_BACKEND``
environment variable (``auto`` | ``numba`` | ``numpy``; default ``auto``
prefers numba when importable) and can be switched at runtime with
:func:`set_backend`, which the benchmark uses to compare both.

Kernel contract (shared by both backends; all arrays packed uint64 per
:mod:`pauliham.bits`, mutated in place):

``rref(phase, x, z, hist, n, col_lo, col_hi)``
    Reduced row echelon form over GF(2) on the combined [X|Z] column
    space (column c < n is X bit c, else Z bit c - n), using phase-tracked
    row products and row swaps only.  Pivot rule: scan columns left to
    right, take the lowest-index row with a set bit at or below the next
    pivot row.  Returns ``(pivot_cols, stop_row, stop_code, row_ops)``
    with stop_code 0 = completed, 1 = a -I row appeared (stop_row is the
    lowest such row of the offending column batch), 2 = odd mod-4 phase
    sum (commutation promise violated; the tableau state is unspecified).
    Both backends produce bit-identical results for codes 0 and 1.

``apply_gates(phase, x, z, n, gates)``
    Sequentially conjugates all rows by primitive gates encoded as int64
    rows (code, a, b): 0 = H(a), 1 = S(a), 2 = CX(a -> b).

``diagonal_layer(phase, x, z, n, theta, s_power)``
    Conjugates all rows by the commuting layer of S^s_power on qubits
    with theta[i][i] = 1 and CZ(i, j) on pairs with theta[i][j] = 1
    (theta symmetric, acting on qubits [0, k)); s_power is 1 or 3.

``cnot_layer(phase, x, z, n, pattern)``
    Conjugates all rows by the commuting layer of CX(i, k + j) for every
    pattern[i][j] = 1, controls on qubits [0, k), targets on [k, k + m).

``scan_minus_rows(phase, x, z)``
    Index of the first row equal to -I, or -1.

``commuting_violations(x, z, n)``
    All pairs (j, k), j < k, of rows with odd symplectic inner product.
"""

from __future__ import annotations

import os

from . import _kernels_np

_BACKENDS = {"numpy": _kernels_np}

try:
    from . import _kernels_nb

    _BACKENDS["numba"] = _kernels_nb
except ImportError:  # pragma: no cover - numba is a declared dependency
    _kernels_nb = None

_KNOWN = ("auto", "numba", "numpy")


def _resolve(name: str) -> str:
    name = name.strip().lower() or "auto"
    if name not in _KNOWN:
        raise ValueError(f"unknown backend {name!r}; expected one of {_KNOWN}")
    if name == "auto":
        return "numba" if "numba" in _BACKENDS else "numpy"
    if name not in _BACKENDS:
        raise ImportError(f"backend {name!r} requested but not importable")
    return name


_active = _resolve(os.environ.get("PAULIHAM_BACKEND", "auto"))


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def active_backend() -> str:
    return _active


def set_backend(name: str) -> str:
    """Switch the active backend; returns the resolved name."""
    global _active
    _active = _resolve(name)
    return _active


def get_backend(name: str):
    """Module object for an explicit backend (benchmark plumbing)."""
    return _BACKENDS[_resolve(name)]


def rref(phase, x, z, hist, n, col_lo, col_hi):
    return _BACKENDS[_active].rref(phase, x, z, hist, n, col_lo, col_hi)


def apply_gates(phase, x, z, n, gates):
    return _BACKENDS[_active].apply_gates(phase, x, z, n, gates)


def diagonal_layer(phase, x, z, n, theta, s_power):
    return _BACKENDS[_active].diagonal_layer(phase, x, z, n, theta, s_power)


def cnot_layer(phase, x, z, n, pattern):
    return _BACKENDS[_active].cnot_layer(phase, x, z, n, pattern)


def scan_minus_rows(phase, x, z):
    return _BACKENDS[_active].scan_minus_rows(phase, x, z)


def commuting_violations(x, z, n):
    return _BACKENDS[_active].commuting_violations(x, z, n)
