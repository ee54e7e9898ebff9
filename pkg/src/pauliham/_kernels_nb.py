"""Numba backend for the hot kernels.

Same contract as :mod:`pauliham._kernels_np`; the jitted loops work on
the packed uint64 arrays directly.  All uint64 constants are built with
np.uint64 up front because mixing signed and unsigned scalars inside
nopython code promotes to float64.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from . import bits

U0 = np.uint64(0)
U1 = np.uint64(1)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)


@njit(cache=True, inline="always")
def _popcnt(v):
    v = v - ((v >> _S1) & _M1)
    v = (v & _M2) + ((v >> _S2) & _M2)
    v = (v + (v >> _S4)) & _M4
    return (v * _H01) >> _S56


@njit(cache=True, inline="always")
def _g_sum_rows(x, z, j, b, width):
    total = np.int64(0)
    for w in range(width):
        x1 = x[j, w]
        z1 = z[j, w]
        x2 = x[b, w]
        z2 = z[b, w]
        xo1 = x1 & ~z1
        yo1 = x1 & z1
        zo1 = ~x1 & z1
        xo2 = x2 & ~z2
        yo2 = x2 & z2
        zo2 = ~x2 & z2
        plus = (yo1 & zo2) | (xo1 & yo2) | (zo1 & xo2)
        minus = (yo1 & xo2) | (xo1 & zo2) | (zo1 & yo2)
        total += np.int64(_popcnt(plus)) - np.int64(_popcnt(minus))
    return total


@njit(cache=True)
def rref(phase, x, z, hist, n, col_lo, col_hi):
    r = phase.shape[0]
    width = x.shape[1]
    hwidth = hist.shape[1]
    pivots = np.empty(min(r, col_hi - col_lo), np.int64)
    npiv = 0
    pr = 0
    row_ops = 0
    for c in range(col_lo, col_hi):
        if c < n:
            wi = c >> 6
            sh = np.uint64(c & 63)
            use_x = True
        else:
            wi = (c - n) >> 6
            sh = np.uint64((c - n) & 63)
            use_x = False
        prow = -1
        for a in range(pr, r):
            word = x[a, wi] if use_x else z[a, wi]
            if (word >> sh) & U1:
                prow = a
                break
        if prow < 0:
            continue
        if prow != pr:
            tp = phase[pr]
            phase[pr] = phase[prow]
            phase[prow] = tp
            for w in range(width):
                t = x[pr, w]
                x[pr, w] = x[prow, w]
                x[prow, w] = t
                t = z[pr, w]
                z[pr, w] = z[prow, w]
                z[prow, w] = t
            for w in range(hwidth):
                t = hist[pr, w]
                hist[pr, w] = hist[prow, w]
                hist[prow, w] = t
        minus_row = -1
        for b in range(r):
            if b == pr:
                continue
            word = x[b, wi] if use_x else z[b, wi]
            if not ((word >> sh) & U1):
                continue
            t_sum = (
                2 * np.int64(phase[pr])
                + 2 * np.int64(phase[b])
                + _g_sum_rows(x, z, pr, b, width)
            )
            if t_sum & 1:
                return pivots[:npiv], b, 2, row_ops
            phase[b] = np.uint8((t_sum & 3) >> 1)
            nonzero = U0
            for w in range(width):
                x[b, w] ^= x[pr, w]
                z[b, w] ^= z[pr, w]
                nonzero |= x[b, w] | z[b, w]
            for w in range(hwidth):
                hist[b, w] ^= hist[pr, w]
            row_ops += 1
            if nonzero == U0 and phase[b] == 1 and minus_row < 0:
                minus_row = b
        pivots[npiv] = c
        npiv += 1
        if minus_row >= 0:
            return pivots[:npiv], minus_row, 1, row_ops
        pr += 1
        if pr == r:
            break
    return pivots[:npiv], -1, 0, row_ops


@njit(cache=True)
def apply_gates(phase, x, z, n, gates):
    r = phase.shape[0]
    for gi in range(gates.shape[0]):
        code = gates[gi, 0]
        a = gates[gi, 1]
        wa = a >> 6
        sa = np.uint64(a & 63)
        if code == 0:  # H
            for row in range(r):
                xa = (x[row, wa] >> sa) & U1
                za = (z[row, wa] >> sa) & U1
                phase[row] ^= np.uint8(xa & za)
                diff = (xa ^ za) << sa
                x[row, wa] ^= diff
                z[row, wa] ^= diff
        elif code == 1:  # S
            for row in range(r):
                xa = (x[row, wa] >> sa) & U1
                za = (z[row, wa] >> sa) & U1
                phase[row] ^= np.uint8(xa & za)
                z[row, wa] ^= xa << sa
        else:  # CX, a = control, b = target
            b = gates[gi, 2]
            wb = b >> 6
            sb = np.uint64(b & 63)
            for row in range(r):
                xa = (x[row, wa] >> sa) & U1
                za = (z[row, wa] >> sa) & U1
                xb = (x[row, wb] >> sb) & U1
                zb = (z[row, wb] >> sb) & U1
                phase[row] ^= np.uint8(xa & zb & (xb ^ za ^ U1))
                x[row, wb] ^= xa << sb
                z[row, wa] ^= zb << sa


@njit(cache=True)
def _diagonal_layer_jit(phase, x, z, theta_p, diag, k, s_flip):
    r = phase.shape[0]
    wk = theta_p.shape[1]
    for row in range(r):
        flip = np.int64(0)
        for v in range(k):
            wv = v >> 6
            sv = np.uint64(v & 63)
            xv = np.int64((x[row, wv] >> sv) & U1)
            zv = np.int64((z[row, wv] >> sv) & U1)
            cnt = np.int64(0)
            for w in range(wk):
                cnt += np.int64(_popcnt(theta_p[v, w] & x[row, w]))
            dv = np.int64(diag[v])
            z1 = zv ^ (dv & xv)
            if xv:
                flip ^= dv & (zv ^ s_flip)
                flip ^= cnt & 1 & z1
                flip ^= (cnt >> 1) & 1
            if (z1 ^ (cnt & 1)) != zv:
                z[row, wv] ^= U1 << sv
        phase[row] ^= np.uint8(flip & 1)


def diagonal_layer(phase, x, z, n, theta, s_power):
    k = theta.shape[0]
    if k == 0 or not theta.any():
        return
    off = theta.copy()
    np.fill_diagonal(off, 0)
    theta_p = bits.pack_bits(off)
    diag = np.ascontiguousarray(np.diagonal(theta))
    _diagonal_layer_jit(phase, x, z, theta_p, diag, k, 0 if s_power == 1 else 1)


@njit(cache=True)
def _cnot_layer_jit(phase, x, z, patc, patt, k, m):
    r = phase.shape[0]
    width = x.shape[1]
    for row in range(r):
        flip = np.int64(0)
        for i in range(k):
            cz = np.int64(0)
            for w in range(width):
                cz += np.int64(_popcnt(patc[i, w] & z[row, w]))
            if cz == 0:
                continue
            wi = i >> 6
            si = np.uint64(i & 63)
            xi = np.int64((x[row, wi] >> si) & U1)
            zi = np.int64((z[row, wi] >> si) & U1)
            if xi:
                flip ^= zi & cz & 1
                flip ^= (cz >> 1) & 1
            if cz & 1:
                z[row, wi] ^= U1 << si
        for jj in range(m):
            cx = np.int64(0)
            for w in range(width):
                cx += np.int64(_popcnt(patt[jj, w] & x[row, w]))
            if cx == 0:
                continue
            j = k + jj
            wj = j >> 6
            sj = np.uint64(j & 63)
            xj = np.int64((x[row, wj] >> sj) & U1)
            zj = np.int64((z[row, wj] >> sj) & U1)
            if zj:
                flip ^= xj & cx & 1
                flip ^= (cx >> 1) & 1
                flip ^= cx & 1
            if cx & 1:
                x[row, wj] ^= U1 << sj
        phase[row] ^= np.uint8(flip & 1)


def cnot_layer(phase, x, z, n, pattern):
    k, m = pattern.shape
    if k == 0 or m == 0 or not pattern.any():
        return
    full_c = np.zeros((k, n), np.uint8)
    full_c[:, k : k + m] = pattern
    full_t = np.zeros((m, n), np.uint8)
    full_t[:, :k] = pattern.T
    _cnot_layer_jit(phase, x, z, bits.pack_bits(full_c), bits.pack_bits(full_t), k, m)


@njit(cache=True)
def scan_minus_rows(phase, x, z):
    r = phase.shape[0]
    width = x.shape[1]
    for row in range(r):
        nonzero = U0
        for w in range(width):
            nonzero |= x[row, w] | z[row, w]
        if nonzero == U0 and phase[row] == 1:
            return row
    return -1


@njit(cache=True)
def commuting_violations(x, z, n):
    r = x.shape[0]
    width = x.shape[1]
    out = np.empty((r * (r - 1) // 2, 2), np.int64)
    cnt = 0
    for j in range(r):
        for k in range(j + 1, r):
            par = U0
            for w in range(width):
                par ^= (_popcnt(x[j, w] & z[k, w]) ^ _popcnt(x[k, w] & z[j, w])) & U1
            if par:
                out[cnt, 0] = j
                out[cnt, 1] = k
                cnt += 1
    return out[:cnt]
