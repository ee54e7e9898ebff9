"""Pure-numpy backend for the hot kernels.

All functions mutate the packed tableau arrays in place and follow the
contract documented in :mod:`pauliham._kernels`.  Row products use the
mod-4 phase rule; per-qubit phase exponents are computed on packed words
as a difference of two popcounts (see :func:`pauliham.pauli.g_sum_packed`).
"""

from __future__ import annotations

import numpy as np

from . import bits

_U1 = np.uint64(1)


def _colbits(x, z, n, c):
    """Boolean column ``c`` of the combined [X|Z] bit matrix."""
    if c < n:
        arr, i = x, c
    else:
        arr, i = z, c - n
    return ((arr[:, i >> 6] >> np.uint64(i & 63)) & _U1).astype(bool)


def _g_sums(xj, zj, xs, zs):
    """Sum of per-qubit phase exponents between one row and many rows."""
    xo1 = xj & ~zj
    yo1 = xj & zj
    zo1 = ~xj & zj
    xo2 = xs & ~zs
    yo2 = xs & zs
    zo2 = ~xs & zs
    plus = (yo1 & zo2) | (xo1 & yo2) | (zo1 & xo2)
    minus = (yo1 & xo2) | (xo1 & zo2) | (zo1 & yo2)
    return np.bitwise_count(plus).sum(axis=1).astype(np.int64) - np.bitwise_count(
        minus
    ).sum(axis=1).astype(np.int64)


def _swap_rows(phase, x, z, hist, a, b):
    phase[[a, b]] = phase[[b, a]]
    x[[a, b]] = x[[b, a]]
    z[[a, b]] = z[[b, a]]
    hist[[a, b]] = hist[[b, a]]


def rref(phase, x, z, hist, n, col_lo, col_hi):
    r = phase.shape[0]
    pivots = []
    pr = 0
    row_ops = 0
    for c in range(col_lo, col_hi):
        colb = _colbits(x, z, n, c)
        cand = np.nonzero(colb[pr:])[0]
        if cand.size == 0:
            continue
        prow = pr + int(cand[0])
        if prow != pr:
            _swap_rows(phase, x, z, hist, pr, prow)
            colb[prow] = False
        colb[pr] = False
        targets = np.nonzero(colb)[0]
        if targets.size:
            t = (
                2 * int(phase[pr])
                + 2 * phase[targets].astype(np.int64)
                + _g_sums(x[pr], z[pr], x[targets], z[targets])
            )
            odd = np.nonzero(t & 1)[0]
            if odd.size:
                return np.array(pivots, np.int64), int(targets[odd[0]]), 2, row_ops
            phase[targets] = ((t & 3) >> 1).astype(np.uint8)
            x[targets] ^= x[pr]
            z[targets] ^= z[pr]
            hist[targets] ^= hist[pr]
            row_ops += int(targets.size)
        pivots.append(c)
        if targets.size:
            zero = ~((x[targets] | z[targets]).any(axis=1))
            hit = np.nonzero(zero & (phase[targets] == 1))[0]
            if hit.size:
                return np.array(pivots, np.int64), int(targets[hit[0]]), 1, row_ops
        pr += 1
        if pr == r:
            break
    return np.array(pivots, np.int64), -1, 0, row_ops


def apply_gates(phase, x, z, n, gates):
    one = _U1
    for gi in range(gates.shape[0]):
        code = int(gates[gi, 0])
        a = int(gates[gi, 1])
        wa, sa = a >> 6, np.uint64(a & 63)
        xa = (x[:, wa] >> sa) & one
        za = (z[:, wa] >> sa) & one
        if code == 0:  # H
            phase ^= (xa & za).astype(np.uint8)
            diff = (xa ^ za) << sa
            x[:, wa] ^= diff
            z[:, wa] ^= diff
        elif code == 1:  # S
            phase ^= (xa & za).astype(np.uint8)
            z[:, wa] ^= xa << sa
        else:  # CX, a = control, b = target
            b = int(gates[gi, 2])
            wb, sb = b >> 6, np.uint64(b & 63)
            xb = (x[:, wb] >> sb) & one
            zb = (z[:, wb] >> sb) & one
            phase ^= (xa & zb & (xb ^ za ^ one)).astype(np.uint8)
            x[:, wb] ^= xa << sb
            z[:, wa] ^= zb << sa


def diagonal_layer(phase, x, z, n, theta, s_power):
    k = theta.shape[0]
    if k == 0 or not theta.any():
        return
    r = phase.shape[0]
    xk = bits.unpack_bits(x, n)[:, :k].astype(np.int64)
    zk = bits.unpack_bits(z, n)[:, :k].astype(np.int64)
    diag = np.diagonal(theta).astype(np.int64)
    off = theta.astype(np.int64).copy()
    np.fill_diagonal(off, 0)
    counts = (xk.astype(np.float64) @ off.astype(np.float64)).astype(np.int64)
    z1 = zk ^ (diag[None, :] & xk)
    if s_power == 1:
        s_term = diag[None, :] & xk & zk
    else:  # S^3 == S-dagger
        s_term = diag[None, :] & xk & (zk ^ 1)
    flips = (s_term + (xk & counts & 1 & z1) + (xk & (counts >> 1) & 1)).sum(axis=1) & 1
    phase ^= flips.astype(np.uint8)
    delta = ((z1 ^ (counts & 1)) ^ zk).astype(np.uint8)
    if delta.any():
        full = np.zeros((r, n), np.uint8)
        full[:, :k] = delta
        z ^= bits.pack_bits(full)


def cnot_layer(phase, x, z, n, pattern):
    k, m = pattern.shape
    if k == 0 or m == 0 or not pattern.any():
        return
    r = phase.shape[0]
    xb = bits.unpack_bits(x, n)
    zb = bits.unpack_bits(z, n)
    xc = xb[:, :k].astype(np.int64)
    zc = zb[:, :k].astype(np.int64)
    xt = xb[:, k : k + m].astype(np.int64)
    zt = zb[:, k : k + m].astype(np.int64)
    pat = pattern.astype(np.float64)
    cx = (xc.astype(np.float64) @ pat).astype(np.int64)  # (r, m) control counts
    cz = (zt.astype(np.float64) @ pat.T).astype(np.int64)  # (r, k) target-z counts
    flips = (
        (xt & zt & cx).sum(axis=1)
        + (zt & (cx >> 1)).sum(axis=1)
        + (zt & cx).sum(axis=1)
        + (xc & zc & cz).sum(axis=1)
        + (xc & (cz >> 1)).sum(axis=1)
    ) & 1
    phase ^= flips.astype(np.uint8)
    dx = (cx & 1).astype(np.uint8)
    dz = (cz & 1).astype(np.uint8)
    if dx.any():
        full = np.zeros((r, n), np.uint8)
        full[:, k : k + m] = dx
        x ^= bits.pack_bits(full)
    if dz.any():
        full = np.zeros((r, n), np.uint8)
        full[:, :k] = dz
        z ^= bits.pack_bits(full)


def scan_minus_rows(phase, x, z):
    zero = ~((x != 0).any(axis=1) | (z != 0).any(axis=1))
    hits = np.nonzero(zero & (phase == 1))[0]
    return int(hits[0]) if hits.size else -1


def commuting_violations(x, z, n):
    xb = bits.unpack_bits(x, n).astype(np.float64)
    zb = bits.unpack_bits(z, n).astype(np.float64)
    gram = (xb @ zb.T + zb @ xb.T).astype(np.int64) & 1
    ju, ku = np.nonzero(np.triu(gram, 1))
    return np.stack([ju, ku], axis=1).astype(np.int64)
