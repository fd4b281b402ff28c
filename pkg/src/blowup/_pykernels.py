"""Pure-Python kernels over adjacency-row bitsets (Python ints).

Reference implementations of the hot loops.  The compiled twin in
``_ckernels.pyx`` mirrors the scan orders exactly so both backends return
identical witnesses.
"""

from __future__ import annotations

BACKEND = "python"


def _bits(x):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def triangle_total(rows, n):
    total = 0
    for u in range(n):
        ru = rows[u]
        for v in _bits(ru >> (u + 1)):
            v += u + 1
            total += ((ru & rows[v]) >> (v + 1)).bit_count()
    return total


def triangle_per_vertex(rows, n):
    out = [0] * n
    for u in range(n):
        ru = rows[u]
        s = 0
        for v in _bits(ru):
            s += (ru & rows[v]).bit_count()
        out[u] = s // 2
    return out


def _sdr3(a_set, b_set, c_set):
    """Distinct representatives (a, b, c) of three bitsets, or None.

    Scans a ascending, then b, taking the least remaining c; the first
    hit is returned, which makes witnesses deterministic.
    """
    for a in _bits(a_set):
        b2 = b_set & ~(1 << a)
        c2 = c_set & ~(1 << a)
        if not b2 or not c2:
            continue
        for b in _bits(b2):
            c3 = c2 & ~(1 << b)
            if c3:
                return a, b, (c3 & -c3).bit_length() - 1
    return None


def _c33_from_triangle(rows, x, y, z):
    excl = (1 << x) | (1 << y) | (1 << z)
    a_set = rows[x] & rows[y] & ~excl
    b_set = rows[y] & rows[z] & ~excl
    c_set = rows[z] & rows[x] & ~excl
    if not (a_set and b_set and c_set):
        return None
    sdr = _sdr3(a_set, b_set, c_set)
    if sdr is None:
        return None
    a, b, c = sdr
    return x, y, z, a, b, c


def c33_witness(rows, n):
    """First triangle (lex) extending to C_3^3; (x,y,z,a,b,c) or None.

    a in N(xy), b in N(yz), c in N(zx), all six vertices distinct.
    """
    for x in range(n):
        rx = rows[x]
        for y in _bits(rx >> (x + 1)):
            y += x + 1
            m = (rx & rows[y]) >> (y + 1)
            for z in _bits(m):
                w = _c33_from_triangle(rows, x, y, z + y + 1)
                if w is not None:
                    return w
    return None


def c33_witness_touching(rows, n, u, v):
    """C_3^3 witness whose central triangle meets {u, v}, or None.

    Sound incremental check: if the graph was C_3^3-free before edge uv
    was inserted, any new copy has a central triangle meeting {u, v}.
    """
    for probe, skip in ((u, -1), (v, u)):
        rp = rows[probe]
        for y in _bits(rp):
            m = rp & rows[y]
            for z in _bits(m >> (y + 1)):
                z += y + 1
                if skip >= 0 and skip in (y, z):
                    continue
                tri = sorted((probe, y, z))
                w = _c33_from_triangle(rows, *tri)
                if w is not None:
                    return w
    return None


def _p33_from_path(rows, v0, v1, v2, v3):
    excl = (1 << v0) | (1 << v1) | (1 << v2) | (1 << v3)
    a_set = rows[v0] & rows[v1] & ~excl
    b_set = rows[v1] & rows[v2] & ~excl
    c_set = rows[v2] & rows[v3] & ~excl
    if not (a_set and b_set and c_set):
        return None
    sdr = _sdr3(a_set, b_set, c_set)
    if sdr is None:
        return None
    a, b, c = sdr
    return v0, v1, v2, v3, a, b, c


def p33_witness(rows, n):
    """First path v0v1v2v3 (lex scan) extending to P_3^3, or None."""
    for v0 in range(n):
        for v1 in _bits(rows[v0]):
            for v2 in _bits(rows[v1] & ~(1 << v0)):
                for v3 in _bits(rows[v2] & ~(1 << v0) & ~(1 << v1)):
                    w = _p33_from_path(rows, v0, v1, v2, v3)
                    if w is not None:
                        return w
    return None


def p33_witness_touching(rows, n, u, v):
    """P_3^3 witness whose 4-vertex path meets {u, v}, or None.

    Sound incremental check after inserting edge uv into a previously
    P_3^3-free graph: the new edge lies inside one of the three cliques,
    each of which contains two consecutive path vertices, so the path
    meets {u, v}.  Paths are scanned with the probe at position 0 then 1;
    positions 2 and 3 are covered by reversal symmetry of the pattern.
    """
    for probe, skip in ((u, -1), (v, u)):
        pbit = 1 << probe
        # probe at position 0
        for v1 in _bits(rows[probe]):
            for v2 in _bits(rows[v1] & ~pbit):
                for v3 in _bits(rows[v2] & ~pbit & ~(1 << v1)):
                    if skip >= 0 and skip in (v1, v2, v3):
                        continue
                    w = _p33_from_path(rows, probe, v1, v2, v3)
                    if w is not None:
                        return w
        # probe at position 1
        for v0 in _bits(rows[probe]):
            for v2 in _bits(rows[probe] & ~(1 << v0)):
                for v3 in _bits(rows[v2] & ~pbit & ~(1 << v0)):
                    if skip >= 0 and skip in (v0, v2, v3):
                        continue
                    w = _p33_from_path(rows, v0, probe, v2, v3)
                    if w is not None:
                        return w
    return None
