# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: SA-IS, Kasai LCP, the single-position scans and the
chunk-list walk.  Semantics match ``_pykernels`` exactly."""

from libc.stdint cimport int32_t, int64_t, uint8_t, uint32_t
from libc.string cimport memmove
from libc.stdlib cimport free, malloc, realloc

import numpy as np

cdef extern from *:
    """
    #include <stdlib.h>
    #if defined(__linux__)
    #include <sys/mman.h>
    #endif
    #define SUS_PREFETCH(p) __builtin_prefetch((const void *)(p))
    #define SUS_PREFETCH_W(p) __builtin_prefetch((const void *)(p), 1)

    /* Large scratch buffers are hit at random; back them with huge pages
       where the kernel allows it so TLB misses do not grow with n. */
    static void *sus_big_alloc(size_t bytes) {
    #if defined(__linux__) && defined(MADV_HUGEPAGE)
        if (bytes >= ((size_t)4 << 20)) {
            void *p = NULL;
            if (posix_memalign(&p, (size_t)2 << 20, bytes) != 0)
                return NULL;
            madvise(p, bytes, MADV_HUGEPAGE);
            return p;
        }
    #endif
        return malloc(bytes);
    }
    """
    void SUS_PREFETCH(const void* p) noexcept nogil
    void SUS_PREFETCH_W(const void* p) noexcept nogil
    void* sus_big_alloc(size_t nbytes) noexcept nogil

# steps of look-ahead for the lcp gathers driven by sequential rank reads
DEF AHEAD = 32

from .errors import PositionError, WalkOrderError

NAME = "c"


# ---------------------------------------------------------------- SA-IS

ctypedef fused idx_t:
    int32_t
    int64_t


cdef inline bint _is_lms(const uint8_t* t, int64_t i) noexcept nogil:
    return i > 0 and t[i] and not t[i - 1]


cdef void _buckets(const idx_t* T, idx_t* bkt, int64_t n, int64_t K,
                   bint ends) noexcept nogil:
    cdef int64_t i
    cdef idx_t s = 0
    for i in range(K):
        bkt[i] = 0
    for i in range(n):
        bkt[T[i]] += 1
    for i in range(K):
        s += bkt[i]
        bkt[i] = s if ends else s - bkt[i]


cdef void _induce(const idx_t* T, idx_t* SA, const uint8_t* t, idx_t* bkt,
                  int64_t n, int64_t K) noexcept nogil:
    cdef int64_t i
    cdef idx_t j, q
    _buckets(T, bkt, n, K, False)
    for i in range(n):
        if i + AHEAD < n:
            q = SA[i + AHEAD] - 1
            if q >= 0:
                SUS_PREFETCH(&T[q])
                SUS_PREFETCH(&t[q])
        j = SA[i] - 1
        if SA[i] > 0 and not t[j]:
            SA[bkt[T[j]]] = j
            bkt[T[j]] += 1
    _buckets(T, bkt, n, K, True)
    i = n - 1
    while i >= 0:
        if i >= AHEAD:
            q = SA[i - AHEAD] - 1
            if q >= 0:
                SUS_PREFETCH(&T[q])
                SUS_PREFETCH(&t[q])
        j = SA[i] - 1
        if SA[i] > 0 and t[j]:
            bkt[T[j]] -= 1
            SA[bkt[T[j]]] = j
        i -= 1


cdef int _sais(const idx_t* T, idx_t* SA, int64_t n, int64_t K) except -1 nogil:
    # T[n - 1] must be 0 and occur nowhere else.
    cdef uint8_t* t = <uint8_t*>sus_big_alloc(n)
    cdef idx_t* bkt = <idx_t*>malloc((K + 1) * sizeof(idx_t))
    cdef int64_t i, j, d, n1, name, pos, prev
    cdef bint diff
    cdef idx_t* s1
    if t == NULL or bkt == NULL:
        free(t)
        free(bkt)
        with gil:
            raise MemoryError()

    t[n - 1] = 1
    if n >= 2:
        t[n - 2] = 0
    i = n - 3
    while i >= 0:
        t[i] = T[i] < T[i + 1] or (T[i] == T[i + 1] and t[i + 1])
        i -= 1

    # sort LMS substrings
    _buckets(T, bkt, n, K, True)
    for i in range(n):
        SA[i] = -1
    for i in range(1, n):
        if _is_lms(t, i):
            bkt[T[i]] -= 1
            SA[bkt[T[i]]] = <idx_t>i
    _induce(T, SA, t, bkt, n, K)

    n1 = 0
    for i in range(n):
        if _is_lms(t, SA[i]):
            SA[n1] = SA[i]
            n1 += 1
    for i in range(n1, n):
        SA[i] = -1
    name = 0
    prev = -1
    for i in range(n1):
        if i + AHEAD < n1:
            SUS_PREFETCH(&T[SA[i + AHEAD]])
            SUS_PREFETCH(&t[SA[i + AHEAD]])
        pos = SA[i]
        diff = False
        d = 0
        while True:
            if prev == -1 or T[pos + d] != T[prev + d] or t[pos + d] != t[prev + d]:
                diff = True
                break
            elif d > 0 and (_is_lms(t, pos + d) or _is_lms(t, prev + d)):
                break
            d += 1
        if diff:
            name += 1
            prev = pos
        SA[n1 + pos // 2] = <idx_t>(name - 1)
    j = n - 1
    i = n - 1
    while i >= n1:
        if SA[i] >= 0:
            SA[j] = SA[i]
            j -= 1
        i -= 1

    # order the LMS suffixes, recursing when names collide
    s1 = SA + n - n1
    if name < n1:
        if _sais(s1, SA, n1, name) < 0:
            free(t)
            free(bkt)
            return -1
    else:
        for i in range(n1):
            SA[s1[i]] = <idx_t>i

    _buckets(T, bkt, n, K, True)
    j = 0
    for i in range(1, n):
        if _is_lms(t, i):
            s1[j] = <idx_t>i
            j += 1
    for i in range(n1):
        if i + AHEAD < n1:
            SUS_PREFETCH(&s1[SA[i + AHEAD]])
        SA[i] = s1[SA[i]]
    for i in range(n1, n):
        SA[i] = -1
    i = n1 - 1
    while i >= 0:
        j = SA[i]
        SA[i] = -1
        bkt[T[j]] -= 1
        SA[bkt[T[j]]] = <idx_t>j
        i -= 1
    _induce(T, SA, t, bkt, n, K)
    free(t)
    free(bkt)
    return 0


cdef int _sais_bytes(const uint8_t[::1] data, idx_t* T, idx_t* SA,
                     uint32_t[::1] out) except -1 nogil:
    cdef int64_t n = data.shape[0], i
    # shift bytes up by one so the internal sentinel 0 is unique
    for i in range(n):
        T[i] = data[i] + 1
    T[n] = 0
    _sais(T, SA, n + 1, 257)
    # SA[0] is the sentinel suffix
    for i in range(n):
        out[i] = <uint32_t>(SA[i + 1] + 1)
    return 0


def suffix_array(const uint8_t[::1] data):
    """Suffix array of raw bytes, as 1-based positions (uint32)."""
    cdef int64_t n = data.shape[0]
    out = np.empty(n, dtype=np.uint32)
    cdef uint32_t[::1] o = out
    cdef void* T
    cdef void* SA
    cdef size_t width = sizeof(int32_t) if n + 1 < 2**31 else sizeof(int64_t)
    T = sus_big_alloc((n + 1) * width)
    SA = sus_big_alloc((n + 1) * width)
    if T == NULL or SA == NULL:
        free(T)
        free(SA)
        raise MemoryError()
    try:
        with nogil:
            if width == sizeof(int32_t):
                _sais_bytes(data, <int32_t*>T, <int32_t*>SA, o)
            else:
                _sais_bytes(data, <int64_t*>T, <int64_t*>SA, o)
    finally:
        free(T)
        free(SA)
    return out


def rank_array(const uint32_t[::1] sa):
    """Invert *sa*; ValueError unless it is a permutation of 1..n."""
    cdef int64_t n = sa.shape[0]
    cdef int64_t j, v
    cdef bint ok = True
    out = np.zeros(n, dtype=np.uint32)
    cdef uint32_t[::1] r = out
    with nogil:
        for j in range(n):
            if j + AHEAD < n:
                v = sa[j + AHEAD]
                if 1 <= v <= n:
                    SUS_PREFETCH_W(&r[v - 1])
            v = sa[j]
            if v < 1 or v > n or r[v - 1] != 0:
                ok = False
                break
            r[v - 1] = <uint32_t>(j + 1)
    if not ok:
        raise ValueError("suffix array is not a permutation of 1..n")
    return out


def lcp_array(const uint8_t[::1] data, const uint32_t[::1] sa, const uint32_t[::1] rank):
    cdef int64_t n = data.shape[0]
    cdef int64_t i, j, h = 0, r, q
    out = np.zeros(n + 1, dtype=np.uint32)
    cdef uint32_t[::1] lcp = out
    with nogil:
        for i in range(n):
            # two-stage look-ahead: the sa slot first, then the text it names
            if i + 2 * AHEAD < n:
                q = rank[i + 2 * AHEAD]
                if q > 1:
                    SUS_PREFETCH(&sa[q - 2])
            if i + AHEAD < n:
                q = rank[i + AHEAD]
                if q > 1:
                    SUS_PREFETCH(&lcp[q - 1])
                    SUS_PREFETCH(&data[sa[q - 2] - 1])
            r = rank[i]
            if r > 1:
                j = sa[r - 2] - 1
                while i + h < n and j + h < n and data[i + h] == data[j + h]:
                    h += 1
                lcp[r - 1] = <uint32_t>h
                if h > 0:
                    h -= 1
            else:
                h = 0
    return out


# ------------------------------------------------------ single position

cdef inline int64_t _lsus_bound(const uint32_t[::1] rank, const uint32_t[::1] lcp,
                                int64_t i) noexcept nogil:
    cdef int64_t r = rank[i - 1]
    cdef int64_t a = lcp[r - 1], b = lcp[r]
    return a if a > b else b


def _check_position(int64_t k, int64_t n):
    if k < 1 or k > n:
        raise PositionError(f"position {k} outside 1..{n}")


def sus_scan(const uint32_t[::1] rank, const uint32_t[::1] lcp, int64_t k):
    cdef int64_t n = rank.shape[0]
    _check_position(k, n)
    cdef int64_t i, L, cand, start = 1, length = n
    with nogil:
        for i in range(1, k + 1):
            L = _lsus_bound(rank, lcp, i)
            if i + L > n:
                break
            cand = L + 1 if L + 1 > k - i + 1 else k - i + 1
            if cand < length:
                start = i
                length = cand
    return start, length


def sus_scan_all(const uint32_t[::1] rank, const uint32_t[::1] lcp, int64_t k):
    cdef int64_t n = rank.shape[0]
    cdef int64_t i, L, cand, length
    _, length = sus_scan(rank, lcp, k)
    out = []
    for i in range(1, k + 1):
        L = _lsus_bound(rank, lcp, i)
        if i + L > n:
            break
        cand = L + 1 if L + 1 > k - i + 1 else k - i + 1
        if cand == length:
            out.append((i, length))
    return out


# ------------------------------------------------------------ the walk

cdef struct Node:
    int64_t cs
    int64_t ce
    int64_t st
    int64_t ln


cdef class SlsWalker:
    """Chunk list in a growable C array; head/tail are slot cursors."""

    cdef const uint32_t[::1] _rank
    cdef const uint32_t[::1] _lcp
    cdef Node* nodes
    cdef int64_t cap
    cdef public int64_t head, tail
    cdef readonly int64_t n, next_k, merge_count, appended, peak_nodes
    cdef int64_t out_st, out_ln

    def __cinit__(self, const uint32_t[::1] rank, const uint32_t[::1] lcp):
        self._rank = rank
        self._lcp = lcp
        self.n = rank.shape[0]
        self.nodes = NULL
        self.cap = 0
        self.head = -1
        self.tail = -1
        self.next_k = 1

    def __dealloc__(self):
        free(self.nodes)

    @property
    def capacity(self):
        return self.cap

    cdef int _room(self) except -1:
        """Make slot tail + 1 usable, compacting live nodes before growing."""
        cdef int64_t live, new_cap
        cdef Node* grown
        if self.tail + 1 < self.cap:
            return 0
        live = self.tail - self.head + 1
        if self.head > 0 and 2 * live <= self.cap:
            memmove(self.nodes, self.nodes + self.head, live * sizeof(Node))
            self.head = 0
            self.tail = live - 1
            return 0
        new_cap = self.cap * 2 if self.cap else 16
        # never hold more slots than positions
        if new_cap > self.n:
            new_cap = self.n
        grown = <Node*>realloc(self.nodes, new_cap * sizeof(Node))
        if grown == NULL:
            raise MemoryError()
        self.nodes = grown
        self.cap = new_cap
        return 0

    cdef int _step(self, int64_t k) except -1:
        """Advance to position k; leaves sls_k in out_st/out_ln (0 if absent)."""
        cdef int64_t L, end, size, j, head, tail
        cdef Node* nd
        if k + AHEAD <= self.n:
            SUS_PREFETCH(&self._lcp[self._rank[k + AHEAD - 1] - 1])
        L = _lsus_bound(self._rank, self._lcp, k)
        if k + L <= self.n:
            end = k + L
            size = L + 1
            if self.head < 0 or end > self.nodes[self.tail].ce:
                self._room()
            head = self.head
            tail = self.tail
            if head < 0:
                nd = self.nodes
                nd[0].cs = k
                nd[0].ce = end
                nd[0].st = k
                nd[0].ln = size
                head = 0
                tail = 0
                self.appended += 1
                j = -1
            elif end > self.nodes[tail].ce:
                nd = self.nodes
                nd[tail + 1].cs = nd[tail].ce + 1
                nd[tail + 1].ce = end
                nd[tail + 1].st = k
                nd[tail + 1].ln = size
                tail += 1
                self.appended += 1
                j = tail - 1
            else:
                j = tail
            nd = self.nodes
            while j >= head and nd[j].ln > size:
                j -= 1
            if j < tail:
                self.merge_count += tail - j - 1
                nd[j + 1].ce = nd[tail].ce
                nd[j + 1].st = k
                nd[j + 1].ln = size
                tail = j + 1
            self.head = head
            self.tail = tail
            if tail - head + 1 > self.peak_nodes:
                self.peak_nodes = tail - head + 1
        self.next_k = k + 1
        head = self.head
        if head < 0:
            self.out_st = 0
            self.out_ln = 0
            return 0
        nd = self.nodes
        self.out_st = nd[head].st
        self.out_ln = nd[head].ln
        if nd[head].ce <= k:
            if head + 1 > self.tail:
                self.head = -1
                self.tail = -1
            else:
                self.head = head + 1
        else:
            nd[head].cs = k + 1
        return 0

    def find_sls(self, int64_t k):
        _check_position(k, self.n)
        if k != self.next_k:
            raise WalkOrderError(f"expected step {self.next_k}, got {k}")
        self._step(k)
        if self.out_st == 0:
            return None
        return (self.out_st, self.out_ln)

    def chunks(self):
        if self.head < 0:
            return []
        return [
            (self.nodes[j].cs, self.nodes[j].ce, self.nodes[j].st, self.nodes[j].ln)
            for j in range(self.head, self.tail + 1)
        ]


cdef class EveryDriver:
    cdef readonly SlsWalker walker
    cdef readonly int64_t n, next_k
    cdef readonly bint all_tied
    cdef int64_t ps, pl

    def __init__(self, rank, lcp, bint all_tied=False):
        self.walker = SlsWalker(rank, lcp)
        self.n = self.walker.n
        self.all_tied = all_tied
        self.next_k = 1
        self.ps = 0
        self.pl = 0

    def fill(self, int64_t count):
        cdef SlsWalker w = self.walker
        cdef int64_t k0 = self.next_k
        cdef int64_t m = self.n - k0 + 1
        if count < m:
            m = count
        if m < 0:
            m = 0
        starts = np.empty(m, dtype=np.uint32)
        lengths = np.empty(m, dtype=np.uint32)
        cdef uint32_t[::1] so = starts
        cdef uint32_t[::1] lo = lengths
        cdef int64_t idx, k, s, ln, ss, sl, ps = self.ps, pl = self.pl, j, t_n = 0
        cdef bint from_sls
        cdef bint tied = self.all_tied
        cdef Node* nd
        cdef int64_t t_cap = 0
        cdef uint32_t[::1] ts
        cdef uint32_t[::1] tl
        cdef int64_t[::1] off
        if tied:
            t_cap = m + 16
            t_starts = np.empty(t_cap, dtype=np.uint32)
            t_lengths = np.empty(t_cap, dtype=np.uint32)
            offsets = np.zeros(m + 1, dtype=np.int64)
            ts = t_starts
            tl = t_lengths
            off = offsets
        for idx in range(m):
            k = k0 + idx
            w._step(k)
            ss = w.out_st
            sl = w.out_ln
            if k == 1 or ps + pl - 1 > k - 1:
                s = ss
                ln = sl
                from_sls = True
            elif ss == 0:
                s = ps
                ln = pl + 1
                from_sls = False
            elif sl < pl + 1:
                s = ss
                ln = sl
                from_sls = True
            elif sl == pl + 1:
                # tie: the extension starts further left, but sls_k ties too
                s = ps
                ln = pl + 1
                from_sls = True
            else:
                s = ps
                ln = pl + 1
                from_sls = False
            so[idx] = <uint32_t>s
            lo[idx] = <uint32_t>ln
            if tied:
                # worst case this position adds 2 + live nodes records
                if t_n + 2 + (w.tail - w.head + 1) > t_cap:
                    t_cap = 2 * t_cap + 2 + (w.tail - w.head + 1)
                    t_starts = np.resize(t_starts, t_cap)
                    t_lengths = np.resize(t_lengths, t_cap)
                    ts = t_starts
                    tl = t_lengths
                if from_sls:
                    if k > 1 and ps + pl - 1 == k - 1 and pl + 1 == ln:
                        ts[t_n] = <uint32_t>ps
                        tl[t_n] = <uint32_t>ln
                        t_n += 1
                    ts[t_n] = <uint32_t>ss
                    tl[t_n] = <uint32_t>sl
                    t_n += 1
                    if w.head >= 0:
                        nd = w.nodes
                        for j in range(w.head, w.tail + 1):
                            if nd[j].ln != ln:
                                break
                            if nd[j].st != ss:
                                ts[t_n] = <uint32_t>nd[j].st
                                tl[t_n] = <uint32_t>nd[j].ln
                                t_n += 1
                else:
                    ts[t_n] = <uint32_t>s
                    tl[t_n] = <uint32_t>ln
                    t_n += 1
                off[idx + 1] = t_n
            ps = s
            pl = ln
        self.ps = ps
        self.pl = pl
        self.next_k = k0 + m
        if not tied:
            return starts, lengths, None, None, None
        return starts, lengths, offsets, t_starts[:t_n], t_lengths[:t_n]
