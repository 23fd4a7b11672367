"""Pure-Python implementations of the exhaustive-scan kernels.

This module is the fallback backend and the reference the compiled backend
(`_kernels.pyx`) is tested against.  Both expose identical signatures.

Conventions shared by both backends:

* a "table" is a ``bytes``-like object indexed by the colex rank of a sorted
  subset of ``range(M)``;
* vertices of {0,1}^N are integers, bit position 1 being the MSB;
* class codes are 0 other, 1 increasing, 2 decreasing, 3 zigzag,
  4 strong zigzag (odd k only).
"""
from math import comb

from .core import colex_indices

OTHER, INCREASING, DECREASING, ZIGZAG, STRONG_ZIGZAG = range(5)


def _classify(d, k):
    m = len(d)
    inc = dec = True
    for i in range(m - 1):
        if d[i] < d[i + 1]:
            dec = False
        else:
            inc = False
    if inc:
        return INCREASING
    if dec:
        return DECREASING
    for i in range(m - 1):
        if i % 2 == 0:
            if d[i] <= d[i + 1]:
                return OTHER
        elif d[i] >= d[i + 1]:
            return OTHER
    if k % 2 == 1 and d[k - 2] < d[k - 4]:
        return STRONG_ZIGZAG
    return ZIGZAG


def _deltas(e, n):
    return [n - (e[i] ^ e[i + 1]).bit_length() + 1 for i in range(len(e) - 1)]


def class_table(N, k):
    M = 1 << N
    out = bytearray(comb(M, k))
    for r, e in enumerate(colex_indices(M, k)):
        out[r] = _classify(_deltas(e, N), k)
    return out


def stepup_table(N, k, phi_red, strong):
    M = 1 << N
    out = bytearray(comb(M, k))
    for r, e in enumerate(colex_indices(M, k)):
        d = _deltas(e, N)
        c = _classify(d, k)
        if c == INCREASING or c == DECREASING:
            s = sorted(d)
            idx = 0
            for j, x in enumerate(s):
                idx += comb(x - 1, j + 1)
            red = phi_red[idx]
        elif strong:
            red = c == STRONG_ZIGZAG
        else:
            red = c == ZIGZAG or c == STRONG_ZIGZAG
        out[r] = 1 if red else 0
    return out


def rank_table(N, k, phi_vals):
    out = bytearray(comb(N, k))
    for r, e in enumerate(colex_indices(N, k)):
        red = 1
        for i in range(k):
            idx = 0
            for j in range(i):
                idx += comb(e[j], j + 1)
            for j in range(i + 1, k):
                idx += comb(e[j], j)
            if phi_vals[idx] != i + 1:
                red = 0
                break
        out[r] = red
    return out


def red_scan(M, k, table, t, lo, hi):
    """Histogram of red counts over (k+1)-subsets of range(M) with max in [lo, hi).

    Returns ``(hist, witness)``: ``hist[c]`` counts sets with ``c`` red edges and
    ``witness`` is the colex-first set with at least ``t`` red edges, or None.
    """
    hist = [0] * (k + 2)
    witness = None
    kk = k + 1
    lo = max(lo, k)
    hi = min(hi, M)
    # ranks of Y - y_i: prefix sums of C(y_j, j+1), suffix sums of C(y_j, j)
    for top in range(lo, hi):
        for rest in colex_indices(top, k):
            y = rest + (top,)
            pre = [0] * (kk + 1)
            for j in range(kk):
                pre[j + 1] = pre[j] + comb(y[j], j + 1)
            suf = [0] * (kk + 1)
            for j in range(kk - 1, -1, -1):
                suf[j] = suf[j + 1] + comb(y[j], j)
            c = 0
            for i in range(kk):
                c += table[pre[i] + suf[i + 1]]
            hist[c] += 1
            if witness is None and c >= t:
                witness = y
    return hist, witness


def _rank(e):
    idx = 0
    for j, x in enumerate(e):
        idx += comb(x, j + 1)
    return idx


def claim1_scan(N, k, classes):
    """Look for (k-1)-sets P with P+x monotone and P+y zigzag.

    Returns ``(checked, violations, first)`` where ``first`` is
    ``(P, x, y)`` for the colex-first offending P, or None.
    """
    M = 1 << N
    checked = violations = 0
    first = None
    for P in colex_indices(M, k - 1):
        checked += 1
        mono = zig = None
        members = set(P)
        for x in range(M):
            if x in members:
                continue
            e = tuple(sorted(P + (x,)))
            c = classes[_rank(e)]
            if c == INCREASING or c == DECREASING:
                if mono is None:
                    mono = x
            elif c == ZIGZAG or c == STRONG_ZIGZAG:
                if zig is None:
                    zig = x
        if mono is not None and zig is not None:
            violations += 1
            if first is None:
                first = (P, mono, zig)
    return checked, violations, first


def case1_scan(N, k, lo, hi):
    """Check deletion propagation on (k+1)-sets with monotone delta-sequence.

    Increasing d: removing a_i (i <= k) deletes d_i, and removing a_{k+1}
    equals removing a_k.  Decreasing d: removing a_i (i >= 2) deletes d_{i-1},
    and removing a_1 equals removing a_2.  Deltas of every subset are computed
    directly from the vertices.
    Returns ``(n_inc, n_dec, n_bad, first_bad)``.
    """
    M = 1 << N
    kk = k + 1
    n_inc = n_dec = n_bad = 0
    first = None
    lo = max(lo, kk - 1)
    hi = min(hi, M)
    for top in range(lo, hi):
        for rest in colex_indices(top, k):
            a = rest + (top,)
            d = _deltas(a, N)
            c = _classify(d, kk) if kk >= 3 else OTHER
            if c == INCREASING:
                n_inc += 1
                ok = True
                for i in range(kk):
                    sub = _deltas(a[:i] + a[i + 1:], N)
                    j = min(i, k - 1)
                    if sub != d[:j] + d[j + 1:]:
                        ok = False
                        break
            elif c == DECREASING:
                n_dec += 1
                ok = True
                for i in range(kk):
                    sub = _deltas(a[:i] + a[i + 1:], N)
                    j = max(i - 1, 0)
                    if sub != d[:j] + d[j + 1:]:
                        ok = False
                        break
            else:
                continue
            if not ok:
                n_bad += 1
                if first is None:
                    first = a
    return n_inc, n_dec, n_bad, first
