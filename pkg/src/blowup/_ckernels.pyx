# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels over packed uint64 adjacency rows.

Mirrors ``_pykernels`` scan orders bit for bit so both backends return
identical witnesses.  Callers guarantee n <= 512 (the dispatcher routes
larger graphs to the pure backend).
"""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "c"

DEF MAXW = 8          # 8 * 64 = 512 vertices
DEF MAXN = 512


cdef int _pack(object rows, int n, int words, uint64_t* buf) except -1:
    cdef int i
    cdef bytes b
    for i in range(n):
        b = rows[i].to_bytes(words * 8, 'little')
        memcpy(buf + i * words, <const char*> b, words * 8)
    return 0


cdef inline bint _test(uint64_t* m, int v) nogil:
    return (m[v >> 6] >> (v & 63)) & 1


cdef inline void _clear(uint64_t* m, int v) nogil:
    m[v >> 6] &= ~((<uint64_t> 1) << (v & 63))


cdef inline bint _any(uint64_t* m, int words) nogil:
    cdef int i
    for i in range(words):
        if m[i]:
            return True
    return False


cdef inline int _first_excl2(uint64_t* m, int words, int a, int b) nogil:
    """Least set bit of m not equal to a or b, or -1."""
    cdef int wi, v
    cdef uint64_t word
    for wi in range(words):
        word = m[wi]
        while word:
            v = (wi << 6) + __builtin_ctzll(word)
            if v != a and v != b:
                return v
            word &= word - 1
    return -1


cdef int _sdr3(uint64_t* A, uint64_t* B, uint64_t* C, int words,
               int* out) nogil:
    """Distinct representatives of A, B, C; same scan as the pure twin."""
    cdef int wa, wb, a, b, c
    cdef uint64_t worda, wordb
    for wa in range(words):
        worda = A[wa]
        while worda:
            a = (wa << 6) + __builtin_ctzll(worda)
            worda &= worda - 1
            for wb in range(words):
                wordb = B[wb]
                while wordb:
                    b = (wb << 6) + __builtin_ctzll(wordb)
                    wordb &= wordb - 1
                    if b == a:
                        continue
                    c = _first_excl2(C, words, a, b)
                    if c >= 0:
                        out[0] = a
                        out[1] = b
                        out[2] = c
                        return 1
    return 0


def triangle_total(rows, int n):
    cdef int words = (n + 63) >> 6
    cdef uint64_t buf[MAXN * MAXW]
    cdef uint64_t word, m
    cdef uint64_t* ru
    cdef uint64_t* rv
    cdef long total = 0
    cdef int u, v, wi, wj, bi
    if words > MAXW:
        raise ValueError("graph too large for compiled kernel")
    _pack(rows, n, words, buf)
    for u in range(n):
        ru = buf + u * words
        for wi in range(u >> 6, words):
            word = ru[wi]
            if wi == (u >> 6):
                bi = (u & 63) + 1
                if bi == 64:
                    continue
                word &= (<uint64_t> ~0) << bi
            while word:
                v = (wi << 6) + __builtin_ctzll(word)
                word &= word - 1
                rv = buf + v * words
                # count common neighbours above v
                for wj in range((v + 1) >> 6, words):
                    m = ru[wj] & rv[wj]
                    if wj == ((v + 1) >> 6) and ((v + 1) & 63):
                        m &= (<uint64_t> ~0) << ((v + 1) & 63)
                    total += __builtin_popcountll(m)
    return total


def triangle_per_vertex(rows, int n):
    cdef int words = (n + 63) >> 6
    cdef uint64_t buf[MAXN * MAXW]
    cdef uint64_t word
    cdef uint64_t* ru
    cdef uint64_t* rv
    cdef long s
    cdef int u, v, wi, wj
    if words > MAXW:
        raise ValueError("graph too large for compiled kernel")
    _pack(rows, n, words, buf)
    out = []
    for u in range(n):
        ru = buf + u * words
        s = 0
        for wi in range(words):
            word = ru[wi]
            while word:
                v = (wi << 6) + __builtin_ctzll(word)
                word &= word - 1
                rv = buf + v * words
                for wj in range(words):
                    s += __builtin_popcountll(ru[wj] & rv[wj])
        out.append(s // 2)
    return out


cdef object _c33_from_triangle(uint64_t* buf, int words, int x, int y, int z):
    cdef uint64_t A[MAXW]
    cdef uint64_t B[MAXW]
    cdef uint64_t C[MAXW]
    cdef int sdr[3]
    cdef int i
    cdef uint64_t* rx = buf + x * words
    cdef uint64_t* ry = buf + y * words
    cdef uint64_t* rz = buf + z * words
    for i in range(words):
        A[i] = rx[i] & ry[i]
        B[i] = ry[i] & rz[i]
        C[i] = rz[i] & rx[i]
    _clear(A, x); _clear(A, y); _clear(A, z)
    _clear(B, x); _clear(B, y); _clear(B, z)
    _clear(C, x); _clear(C, y); _clear(C, z)
    if not (_any(A, words) and _any(B, words) and _any(C, words)):
        return None
    if _sdr3(A, B, C, words, sdr):
        return (x, y, z, sdr[0], sdr[1], sdr[2])
    return None


def c33_witness(rows, int n):
    cdef int words = (n + 63) >> 6
    cdef uint64_t buf[MAXN * MAXW]
    cdef uint64_t wordy, wordz
    cdef uint64_t* rx
    cdef uint64_t* ry
    cdef int x, y, z, wi, wj, bi
    if words > MAXW:
        raise ValueError("graph too large for compiled kernel")
    _pack(rows, n, words, buf)
    for x in range(n):
        rx = buf + x * words
        for wi in range((x + 1) >> 6, words):
            wordy = rx[wi]
            if wi == ((x + 1) >> 6) and ((x + 1) & 63):
                wordy &= (<uint64_t> ~0) << ((x + 1) & 63)
            while wordy:
                y = (wi << 6) + __builtin_ctzll(wordy)
                wordy &= wordy - 1
                ry = buf + y * words
                for wj in range((y + 1) >> 6, words):
                    wordz = rx[wj] & ry[wj]
                    if wj == ((y + 1) >> 6) and ((y + 1) & 63):
                        wordz &= (<uint64_t> ~0) << ((y + 1) & 63)
                    while wordz:
                        z = (wj << 6) + __builtin_ctzll(wordz)
                        wordz &= wordz - 1
                        w = _c33_from_triangle(buf, words, x, y, z)
                        if w is not None:
                            return w
    return None


def c33_witness_touching(rows, int n, int u, int v):
    cdef int words = (n + 63) >> 6
    cdef uint64_t buf[MAXN * MAXW]
    cdef uint64_t wordy, wordz
    cdef uint64_t* rp
    cdef uint64_t* ry
    cdef int probe, skip, y, z, wi, wj, k, a, b, c
    cdef int tri[3]
    if words > MAXW:
        raise ValueError("graph too large for compiled kernel")
    _pack(rows, n, words, buf)
    for k in range(2):
        probe = u if k == 0 else v
        skip = -1 if k == 0 else u
        rp = buf + probe * words
        for wi in range(words):
            wordy = rp[wi]
            while wordy:
                y = (wi << 6) + __builtin_ctzll(wordy)
                wordy &= wordy - 1
                ry = buf + y * words
                for wj in range((y + 1) >> 6, words):
                    wordz = rp[wj] & ry[wj]
                    if wj == ((y + 1) >> 6) and ((y + 1) & 63):
                        wordz &= (<uint64_t> ~0) << ((y + 1) & 63)
                    while wordz:
                        z = (wj << 6) + __builtin_ctzll(wordz)
                        wordz &= wordz - 1
                        if skip >= 0 and (skip == y or skip == z):
                            continue
                        # sort (probe, y, z); y < z already
                        if probe < y:
                            a = probe; b = y; c = z
                        elif probe < z:
                            a = y; b = probe; c = z
                        else:
                            a = y; b = z; c = probe
                        w = _c33_from_triangle(buf, words, a, b, c)
                        if w is not None:
                            return w
    return None


cdef object _p33_from_path(uint64_t* buf, int words,
                           int v0, int v1, int v2, int v3):
    cdef uint64_t A[MAXW]
    cdef uint64_t B[MAXW]
    cdef uint64_t C[MAXW]
    cdef int sdr[3]
    cdef int i
    cdef uint64_t* r0 = buf + v0 * words
    cdef uint64_t* r1 = buf + v1 * words
    cdef uint64_t* r2 = buf + v2 * words
    cdef uint64_t* r3 = buf + v3 * words
    for i in range(words):
        A[i] = r0[i] & r1[i]
        B[i] = r1[i] & r2[i]
        C[i] = r2[i] & r3[i]
    _clear(A, v0); _clear(A, v1); _clear(A, v2); _clear(A, v3)
    _clear(B, v0); _clear(B, v1); _clear(B, v2); _clear(B, v3)
    _clear(C, v0); _clear(C, v1); _clear(C, v2); _clear(C, v3)
    if not (_any(A, words) and _any(B, words) and _any(C, words)):
        return None
    if _sdr3(A, B, C, words, sdr):
        return (v0, v1, v2, v3, sdr[0], sdr[1], sdr[2])
    return None


def p33_witness(rows, int n):
    cdef int words = (n + 63) >> 6
    cdef uint64_t buf[MAXN * MAXW]
    cdef uint64_t w1, w2, w3
    cdef int v0, v1, v2, v3, i1, i2, i3
    if words > MAXW:
        raise ValueError("graph too large for compiled kernel")
    _pack(rows, n, words, buf)
    for v0 in range(n):
        for i1 in range(words):
            w1 = (buf + v0 * words)[i1]
            while w1:
                v1 = (i1 << 6) + __builtin_ctzll(w1)
                w1 &= w1 - 1
                for i2 in range(words):
                    w2 = (buf + v1 * words)[i2]
                    if i2 == (v0 >> 6):
                        w2 &= ~((<uint64_t> 1) << (v0 & 63))
                    while w2:
                        v2 = (i2 << 6) + __builtin_ctzll(w2)
                        w2 &= w2 - 1
                        for i3 in range(words):
                            w3 = (buf + v2 * words)[i3]
                            if i3 == (v0 >> 6):
                                w3 &= ~((<uint64_t> 1) << (v0 & 63))
                            if i3 == (v1 >> 6):
                                w3 &= ~((<uint64_t> 1) << (v1 & 63))
                            while w3:
                                v3 = (i3 << 6) + __builtin_ctzll(w3)
                                w3 &= w3 - 1
                                w = _p33_from_path(buf, words, v0, v1, v2, v3)
                                if w is not None:
                                    return w
    return None


def p33_witness_touching(rows, int n, int u, int v):
    cdef int words = (n + 63) >> 6
    cdef uint64_t buf[MAXN * MAXW]
    cdef uint64_t w0, w1, w2, w3
    cdef int probe, skip, k, v0, v1, v2, v3, i0, i1, i2, i3
    if words > MAXW:
        raise ValueError("graph too large for compiled kernel")
    _pack(rows, n, words, buf)
    for k in range(2):
        probe = u if k == 0 else v
        skip = -1 if k == 0 else u
        # probe at position 0
        for i1 in range(words):
            w1 = (buf + probe * words)[i1]
            while w1:
                v1 = (i1 << 6) + __builtin_ctzll(w1)
                w1 &= w1 - 1
                for i2 in range(words):
                    w2 = (buf + v1 * words)[i2]
                    if i2 == (probe >> 6):
                        w2 &= ~((<uint64_t> 1) << (probe & 63))
                    while w2:
                        v2 = (i2 << 6) + __builtin_ctzll(w2)
                        w2 &= w2 - 1
                        for i3 in range(words):
                            w3 = (buf + v2 * words)[i3]
                            if i3 == (probe >> 6):
                                w3 &= ~((<uint64_t> 1) << (probe & 63))
                            if i3 == (v1 >> 6):
                                w3 &= ~((<uint64_t> 1) << (v1 & 63))
                            while w3:
                                v3 = (i3 << 6) + __builtin_ctzll(w3)
                                w3 &= w3 - 1
                                if skip >= 0 and (skip == v1 or skip == v2
                                                  or skip == v3):
                                    continue
                                w = _p33_from_path(buf, words,
                                                   probe, v1, v2, v3)
                                if w is not None:
                                    return w
        # probe at position 1
        for i0 in range(words):
            w0 = (buf + probe * words)[i0]
            while w0:
                v0 = (i0 << 6) + __builtin_ctzll(w0)
                w0 &= w0 - 1
                for i2 in range(words):
                    w2 = (buf + probe * words)[i2]
                    if i2 == (v0 >> 6):
                        w2 &= ~((<uint64_t> 1) << (v0 & 63))
                    while w2:
                        v2 = (i2 << 6) + __builtin_ctzll(w2)
                        w2 &= w2 - 1
                        for i3 in range(words):
                            w3 = (buf + v2 * words)[i3]
                            if i3 == (probe >> 6):
                                w3 &= ~((<uint64_t> 1) << (probe & 63))
                            if i3 == (v0 >> 6):
                                w3 &= ~((<uint64_t> 1) << (v0 & 63))
                            while w3:
                                v3 = (i3 << 6) + __builtin_ctzll(w3)
                                w3 &= w3 - 1
                                if skip >= 0 and (skip == v0 or skip == v2
                                                  or skip == v3):
                                    continue
                                w = _p33_from_path(buf, words,
                                                   v0, probe, v2, v3)
                                if w is not None:
                                    return w
    return None
