# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exhaustive-scan kernels; see ``_pykernels`` for the contracts."""

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil

cdef enum:
    MAXV = 130
    MAXK = 13
    OTHER = 0
    INCREASING = 1
    DECREASING = 2
    ZIGZAG = 3
    STRONG_ZIGZAG = 4

cdef long long BIN[MAXV][MAXK + 1]


cdef void _init_binom():
    cdef int x, j
    for x in range(MAXV):
        BIN[x][0] = 1
        for j in range(1, MAXK + 1):
            if x == 0:
                BIN[x][j] = 0
            else:
                BIN[x][j] = BIN[x - 1][j - 1] + BIN[x - 1][j]

_init_binom()


cdef void _check(int M, int k) except *:
    if M >= MAXV or k + 1 > MAXK or k < 1:
        raise ValueError(f"kernel limits exceeded (M={M}, k={k})")


cdef inline int _delta(unsigned long long a, unsigned long long b, int n) nogil:
    return n - 63 + __builtin_clzll(a ^ b)


cdef inline bint _next_colex(int* c, int k, int m) nogil:
    cdef int i = 0, j
    while i < k - 1 and c[i] + 1 == c[i + 1]:
        i += 1
    if i == k - 1 and c[i] + 1 == m:
        return False
    c[i] += 1
    for j in range(i):
        c[j] = j
    return True


cdef inline int _classify(int* d, int m, int k) nogil:
    cdef int i
    cdef bint inc = True, dec = True
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


cdef inline long long _rank(int* e, int k) nogil:
    cdef long long r = 0
    cdef int j
    for j in range(k):
        r += BIN[e[j]][j + 1]
    return r


def class_table(int N, int k):
    cdef int M = 1 << N
    _check(M, k)
    cdef long long total = BIN[M][k], r = 0
    out = bytearray(total)
    cdef unsigned char[:] o = out
    cdef int c[MAXK]
    cdef int d[MAXK]
    cdef int i
    if total == 0:
        return out
    for i in range(k):
        c[i] = i
    with nogil:
        while True:
            for i in range(k - 1):
                d[i] = _delta(c[i], c[i + 1], N)
            o[r] = _classify(d, k - 1, k)
            r += 1
            if not _next_colex(c, k, M):
                break
    return out


def stepup_table(int N, int k, const unsigned char[:] phi_red, bint strong):
    cdef int M = 1 << N
    _check(M, k)
    cdef long long total = BIN[M][k], r = 0, idx
    out = bytearray(total)
    cdef unsigned char[:] o = out
    cdef int c[MAXK]
    cdef int d[MAXK]
    cdef int s[MAXK]
    cdef int i, j, x, cls, m = k - 1
    cdef unsigned char red
    if total == 0:
        return out
    for i in range(k):
        c[i] = i
    with nogil:
        while True:
            for i in range(m):
                d[i] = _delta(c[i], c[i + 1], N)
            cls = _classify(d, m, k)
            if cls == INCREASING or cls == DECREASING:
                idx = 0
                for j in range(m):
                    # sorted position of d[j] among distinct values
                    x = d[j] if cls == INCREASING else d[m - 1 - j]
                    idx += BIN[x - 1][j + 1]
                red = 1 if phi_red[idx] else 0
            elif strong:
                red = cls == STRONG_ZIGZAG
            else:
                red = cls == ZIGZAG or cls == STRONG_ZIGZAG
            o[r] = red
            r += 1
            if not _next_colex(c, k, M):
                break
    return out


def rank_table(int N, int k, const unsigned char[:] phi_vals):
    _check(N, k)
    cdef long long total = BIN[N][k], r = 0, idx
    out = bytearray(total)
    cdef unsigned char[:] o = out
    cdef int c[MAXK]
    cdef int i, j
    cdef unsigned char red
    if total == 0:
        return out
    for i in range(k):
        c[i] = i
    with nogil:
        while True:
            red = 1
            for i in range(k):
                idx = 0
                for j in range(i):
                    idx += BIN[c[j]][j + 1]
                for j in range(i + 1, k):
                    idx += BIN[c[j]][j]
                if phi_vals[idx] != i + 1:
                    red = 0
                    break
            o[r] = red
            r += 1
            if not _next_colex(c, k, N):
                break
    return out


def red_scan(int M, int k, const unsigned char[:] table, int t, int lo, int hi):
    _check(M, k)
    cdef int kk = k + 1
    cdef long long hist[MAXK + 1]
    cdef long long pre[MAXK + 1]
    cdef long long suf[MAXK + 1]
    cdef int y[MAXK + 1]
    cdef int i, j, cnt, top
    cdef bint found = False
    cdef int wit[MAXK + 1]
    for i in range(kk + 1):
        hist[i] = 0
    if lo < k:
        lo = k
    if hi > M:
        hi = M
    with nogil:
        for top in range(lo, hi):
            for i in range(k):
                y[i] = i
            y[k] = top
            while True:
                pre[0] = 0
                for j in range(kk):
                    pre[j + 1] = pre[j] + BIN[y[j]][j + 1]
                suf[kk] = 0
                for j in range(kk - 1, -1, -1):
                    suf[j] = suf[j + 1] + BIN[y[j]][j]
                cnt = 0
                for i in range(kk):
                    cnt += table[pre[i] + suf[i + 1]]
                hist[cnt] += 1
                if not found and cnt >= t:
                    found = True
                    for i in range(kk):
                        wit[i] = y[i]
                if not _next_colex(y, k, top):
                    break
    h = [hist[i] for i in range(kk + 1)]
    if found:
        return h, tuple([wit[i] for i in range(kk)])
    return h, None


def claim1_scan(int N, int k, const unsigned char[:] classes):
    cdef int M = 1 << N
    _check(M, k)
    cdef int m = k - 1
    cdef int P[MAXK]
    cdef int e[MAXK]
    cdef int i, j, x, pos, cls, mono, zig
    cdef long long checked = 0, violations = 0
    cdef int fP[MAXK]
    cdef int fx = -1, fy = -1
    for i in range(m):
        P[i] = i
    with nogil:
        while True:
            checked += 1
            mono = -1
            zig = -1
            pos = 0
            for x in range(M):
                if pos < m and P[pos] == x:
                    pos += 1
                    continue
                # P + x, sorted: x sits at index pos
                for j in range(pos):
                    e[j] = P[j]
                e[pos] = x
                for j in range(pos, m):
                    e[j + 1] = P[j]
                cls = classes[_rank(e, k)]
                if cls == INCREASING or cls == DECREASING:
                    if mono < 0:
                        mono = x
                elif cls == ZIGZAG or cls == STRONG_ZIGZAG:
                    if zig < 0:
                        zig = x
            if mono >= 0 and zig >= 0:
                violations += 1
                if fx < 0:
                    fx = mono
                    fy = zig
                    for j in range(m):
                        fP[j] = P[j]
            if not _next_colex(P, m, M):
                break
    if fx >= 0:
        return checked, violations, (tuple([fP[j] for j in range(m)]), fx, fy)
    return checked, violations, None


cdef bint _check_deleted(int* a, int* d, int kk, int N, bint increasing) nogil:
    cdef int sub[MAXK + 1]
    cdef int sd[MAXK]
    cdef int i, j, p, skip, k = kk - 1
    for i in range(kk):
        p = 0
        for j in range(kk):
            if j != i:
                sub[p] = a[j]
                p += 1
        for j in range(k - 1):
            sd[j] = _delta(sub[j], sub[j + 1], N)
        if increasing:
            skip = i if i < k - 1 else k - 1
        else:
            skip = i - 1 if i > 0 else 0
        p = 0
        for j in range(k):
            if j == skip:
                continue
            if sd[p] != d[j]:
                return False
            p += 1
    return True


def case1_scan(int N, int k, int lo, int hi):
    cdef int M = 1 << N
    _check(M, k)
    cdef int kk = k + 1
    cdef int a[MAXK + 1]
    cdef int d[MAXK]
    cdef int i, top, cls
    cdef long long n_inc = 0, n_dec = 0, n_bad = 0
    cdef bint ok, found = False
    cdef int fa[MAXK + 1]
    if lo < k:
        lo = k
    if hi > M:
        hi = M
    with nogil:
        for top in range(lo, hi):
            for i in range(k):
                a[i] = i
            a[k] = top
            while True:
                for i in range(k):
                    d[i] = _delta(a[i], a[i + 1], N)
                cls = _classify(d, k, kk)
                if cls == INCREASING or cls == DECREASING:
                    if cls == INCREASING:
                        n_inc += 1
                    else:
                        n_dec += 1
                    ok = _check_deleted(a, d, kk, N, cls == INCREASING)
                    if not ok:
                        n_bad += 1
                        if not found:
                            found = True
                            for i in range(kk):
                                fa[i] = a[i]
                if not _next_colex(a, k, top):
                    break
    if found:
        return n_inc, n_dec, n_bad, tuple([fa[i] for i in range(kk)])
    return n_inc, n_dec, n_bad, None
