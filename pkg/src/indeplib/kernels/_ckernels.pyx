# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels (graphs up to 127 vertices).

Semantics are identical to _pykernels; the dispatcher in __init__ keeps the
pure-Python twin as the fallback and for larger graphs.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)

cdef inline int popcount(u128 x):
    return __builtin_popcountll(<u64>x) + __builtin_popcountll(<u64>(x >> 64))

cdef inline int lowest(u128 x):
    cdef u64 lo = <u64>x
    if lo:
        return __builtin_ctzll(lo)
    return 64 + __builtin_ctzll(<u64>(x >> 64))

cdef u128* _to_masks(object adj) except NULL:
    cdef Py_ssize_t n = len(adj)
    cdef u128* out = <u128*>PyMem_Malloc(n * sizeof(u128))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = <u128>adj[i]
    return out


cdef int _clique_cover_bound(u128* adj, u128 mask):
    cdef int count = 0
    cdef u128 rest = mask, cand
    cdef int u, w
    while rest:
        u = lowest(rest)
        rest &= rest - 1
        cand = rest & adj[u]
        while cand:
            w = lowest(cand)
            rest &= ~((<u128>1) << w)
            cand &= cand - 1
            cand &= adj[w]
        count += 1
    return count


cdef struct BBState:
    u128* adj
    int best_size
    u128 best_mask


cdef void _bb_expand(BBState* st, u128 p, u128 cur_mask, int cur_size):
    cdef u128 w, nb
    cdef int v, d, bv, bd
    cdef bint reduced
    cdef u128* adj = st.adj
    while True:
        reduced = False
        w = p
        while w:
            v = lowest(w)
            w &= w - 1
            nb = adj[v] & p
            d = popcount(nb)
            if d == 0:
                p &= ~((<u128>1) << v)
                cur_mask |= (<u128>1) << v
                cur_size += 1
                reduced = True
            elif d == 1:
                p &= ~(nb | ((<u128>1) << v))
                cur_mask |= (<u128>1) << v
                cur_size += 1
                reduced = True
                break
        if reduced:
            continue
        if p == 0:
            if cur_size > st.best_size:
                st.best_size = cur_size
                st.best_mask = cur_mask
            return
        if cur_size + _clique_cover_bound(adj, p) <= st.best_size:
            return
        bv = -1
        bd = -1
        w = p
        while w:
            v = lowest(w)
            w &= w - 1
            d = popcount(adj[v] & p)
            if d > bd:
                bd = d
                bv = v
        _bb_expand(st, p & ~(adj[bv] | ((<u128>1) << bv)),
                   cur_mask | ((<u128>1) << bv), cur_size + 1)
        p &= ~((<u128>1) << bv)


def max_independent_set(object adj, int initial_best=0):
    cdef Py_ssize_t n = len(adj)
    if n > 127:
        raise ValueError("compiled kernel limited to 127 vertices")
    cdef BBState st
    st.adj = _to_masks(adj)
    st.best_size = initial_best
    st.best_mask = 0
    cdef u128 full = 0
    if n:
        full = ((<u128>1) << n) - 1
    try:
        _bb_expand(&st, full, 0, 0)
    finally:
        PyMem_Free(st.adj)
    return st.best_size, int(st.best_mask)


def maximal_independent_sets(object adj):
    """Deterministic stream of maximal independent sets (pivoting
    Bron-Kerbosch on the complement)."""
    cdef Py_ssize_t n = len(adj)
    if n > 127:
        raise ValueError("compiled kernel limited to 127 vertices")
    cdef u128 full = 0
    if n:
        full = ((<u128>1) << n) - 1
    cdef u128* comp = <u128*>PyMem_Malloc(max(n, 1) * sizeof(u128))
    if comp == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        comp[i] = full & ~(<u128>adj[i]) & ~((<u128>1) << i)

    cdef int cap = <int>n + 2
    cdef u128* rs = <u128*>PyMem_Malloc(cap * sizeof(u128))
    cdef u128* ps = <u128*>PyMem_Malloc(cap * sizeof(u128))
    cdef u128* xs = <u128*>PyMem_Malloc(cap * sizeof(u128))
    cdef u128* cs = <u128*>PyMem_Malloc(cap * sizeof(u128))
    cdef char* fresh = <char*>PyMem_Malloc(cap)
    if rs == NULL or ps == NULL or xs == NULL or cs == NULL or fresh == NULL:
        PyMem_Free(comp); PyMem_Free(rs); PyMem_Free(ps)
        PyMem_Free(xs); PyMem_Free(cs); PyMem_Free(fresh)
        raise MemoryError()

    cdef int depth = 0
    cdef u128 r, p, x, cand, w, bit
    cdef int u, v, d, pivot, pivot_deg
    rs[0] = 0; ps[0] = full; xs[0] = 0; cs[0] = 0; fresh[0] = 1
    try:
        while depth >= 0:
            r = rs[depth]; p = ps[depth]; x = xs[depth]
            if fresh[depth]:
                if p == 0 and x == 0:
                    yield int(r)
                    depth -= 1
                    continue
                pivot = -1
                pivot_deg = -1
                w = p | x
                while w:
                    u = lowest(w)
                    w &= w - 1
                    d = popcount(comp[u] & p)
                    if d > pivot_deg:
                        pivot_deg = d
                        pivot = u
                cs[depth] = p & ~comp[pivot]
                fresh[depth] = 0
            cand = cs[depth]
            if cand == 0:
                depth -= 1
                continue
            v = lowest(cand)
            bit = (<u128>1) << v
            ps[depth] = p & ~bit
            xs[depth] = x | bit
            cs[depth] = cand & ~bit
            depth += 1
            rs[depth] = r | bit
            ps[depth] = p & comp[v]
            xs[depth] = x & comp[v]
            fresh[depth] = 1
    finally:
        PyMem_Free(comp); PyMem_Free(rs); PyMem_Free(ps)
        PyMem_Free(xs); PyMem_Free(cs); PyMem_Free(fresh)


def count_maximal_independent_sets(object adj):
    cdef long long count = 0
    for _ in maximal_independent_sets(adj):
        count += 1
    return count


cdef bint _augment(u128* adj, u128 right_mask, int* match_right, int u, u128* visited):
    cdef u128 w = adj[u] & right_mask & ~visited[0]
    visited[0] |= w
    cdef int j
    while w:
        j = lowest(w)
        w &= w - 1
        if match_right[j] < 0 or _augment(adj, right_mask, match_right, match_right[j], visited):
            match_right[j] = u
            return True
    return False


def bipartite_matching(int nleft, int nright, object adj, object left_mask=-1, object right_mask=-1):
    if nleft > 127 or nright > 127:
        raise ValueError("compiled kernel limited to 127 vertices")
    cdef u128 lmask, rmask
    if left_mask == -1:
        lmask = ((<u128>1) << nleft) - 1 if nleft else 0
    else:
        lmask = <u128>left_mask
    if right_mask == -1:
        rmask = ((<u128>1) << nright) - 1 if nright else 0
    else:
        rmask = <u128>right_mask
    cdef u128* amasks = _to_masks(adj)
    cdef int* match_right = <int*>PyMem_Malloc(max(nright, 1) * sizeof(int))
    if match_right == NULL:
        PyMem_Free(amasks)
        raise MemoryError()
    cdef int j, u, size = 0
    cdef u128 w, visited
    try:
        for j in range(nright):
            match_right[j] = -1
        w = lmask
        while w:
            u = lowest(w)
            w &= w - 1
            if amasks[u] & rmask:
                visited = 0
                if _augment(amasks, rmask, match_right, u, &visited):
                    size += 1
        return size, [match_right[j] for j in range(nright)]
    finally:
        PyMem_Free(amasks)
        PyMem_Free(match_right)
