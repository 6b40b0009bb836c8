"""Compiled exhaustive scans over 3- and 4-element index subsets.

A pattern of length k is identified by the outcomes of its k*(k-1)/2 pairwise
comparisons, packed into a bitmask in the fixed pair order used by the loops
below. Every subset is visited; nothing is pruned.
"""

import numpy as np
from numba import njit

# pair order follows the loop nesting: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3)
_PAIRS = {
    3: ((0, 1), (0, 2), (1, 2)),
    4: ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)),
}


def pattern_mask(pattern):
    bits = 0
    for shift, (i, j) in enumerate(_PAIRS[len(pattern)]):
        if pattern[i] < pattern[j]:
            bits |= 1 << shift
    return bits


def forbidden_table(patterns, k):
    table = np.zeros(1 << len(_PAIRS[k]), dtype=np.bool_)
    for p in patterns:
        table[pattern_mask(p)] = True
    return table


@njit(cache=True)
def _find4(v, table, out):
    n = v.shape[0]
    for a in range(n):
        va = v[a]
        for b in range(a + 1, n):
            vb = v[b]
            m_b = 1 if va < vb else 0
            for c in range(b + 1, n):
                vc = v[c]
                m_c = m_b
                if va < vc:
                    m_c |= 2
                if vb < vc:
                    m_c |= 4
                for d in range(c + 1, n):
                    vd = v[d]
                    m = m_c
                    if va < vd:
                        m |= 8
                    if vb < vd:
                        m |= 16
                    if vc < vd:
                        m |= 32
                    if table[m]:
                        out[0] = a
                        out[1] = b
                        out[2] = c
                        out[3] = d
                        return True
    return False


@njit(cache=True)
def _find3(v, table, out):
    n = v.shape[0]
    for a in range(n):
        va = v[a]
        for b in range(a + 1, n):
            vb = v[b]
            m_b = 1 if va < vb else 0
            for c in range(b + 1, n):
                vc = v[c]
                m = m_b
                if va < vc:
                    m |= 2
                if vb < vc:
                    m |= 4
                if table[m]:
                    out[0] = a
                    out[1] = b
                    out[2] = c
                    return True
    return False


@njit(cache=True)
def _batch_avoids4(rows, table):
    res = np.ones(rows.shape[0], dtype=np.bool_)
    out = np.empty(4, dtype=np.int64)
    for r in range(rows.shape[0]):
        if _find4(rows[r], table, out):
            res[r] = False
    return res


@njit(cache=True)
def _batch_avoids3(rows, table):
    res = np.ones(rows.shape[0], dtype=np.bool_)
    out = np.empty(3, dtype=np.int64)
    for r in range(rows.shape[0]):
        if _find3(rows[r], table, out):
            res[r] = False
    return res


def find_occurrence(values, patterns, k):
    """Return 0-based positions of the first occurrence of any pattern, or None."""
    v = np.asarray(values, dtype=np.int64)
    out = np.full(k, -1, dtype=np.int64)
    table = forbidden_table(patterns, k)
    found = _find4(v, table, out) if k == 4 else _find3(v, table, out)
    return tuple(int(x) for x in out) if found else None


def batch_avoids(rows, patterns, k):
    """Boolean mask over the rows of a 2-D array: True where no pattern occurs."""
    table = forbidden_table(patterns, k)
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    return _batch_avoids4(rows, table) if k == 4 else _batch_avoids3(rows, table)
