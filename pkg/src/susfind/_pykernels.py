"""Pure-Python/numpy kernels.

Used when the compiled ``_ckernels`` extension is unavailable, or when a
caller asks for ``backend="python"``.  Both modules expose the same names
and semantics; the test suite runs the correctness checks against each.

Array conventions (shared with the compiled module): ``sa`` and ``rank``
hold 1-based values at 0-based offsets, so ``sa[j - 1]`` is the textbook
``SA[j]``.  ``lcp`` has ``n + 1`` entries and ``lcp[i - 1]`` is ``LCP[i]``.
"""
from __future__ import annotations

import numpy as np

from .errors import PositionError, WalkOrderError

NAME = "python"


def suffix_array(data: bytes) -> np.ndarray:
    """Prefix doubling on numpy ranks; O(n log n) per round, O(log n) rounds."""
    n = len(data)
    rk = np.frombuffer(data, dtype=np.uint8).astype(np.int64) + 1
    order = np.zeros(n, dtype=np.int64)
    h = 1
    while True:
        second = np.zeros(n, dtype=np.int64)
        if h < n:
            second[: n - h] = rk[h:]
        order = np.lexsort((second, rk))
        r1 = rk[order]
        r2 = second[order]
        bump = np.empty(n, dtype=np.int64)
        bump[0] = 1
        bump[1:] = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        new = np.empty(n, dtype=np.int64)
        new[order] = np.cumsum(bump)
        rk = new
        if rk[order[-1]] == n or h >= n:
            break
        h *= 2
    return (order + 1).astype(np.uint32)


def rank_array(sa: np.ndarray) -> np.ndarray:
    """Invert *sa*; ValueError unless it is a permutation of 1..n."""
    n = len(sa)
    pos = sa.astype(np.int64)
    if n and (pos.min() < 1 or pos.max() > n):
        raise ValueError("suffix array is not a permutation of 1..n")
    rank = np.zeros(n, dtype=np.uint32)
    rank[pos - 1] = np.arange(1, n + 1, dtype=np.uint32)
    # a repeated position leaves some slot unwritten
    if n and not rank.all():
        raise ValueError("suffix array is not a permutation of 1..n")
    return rank


def lcp_array(data: bytes, sa: np.ndarray, rank: np.ndarray) -> np.ndarray:
    """Kasai et al.: walk text positions in order, reusing h - 1."""
    n = len(data)
    sa_l = sa.tolist()
    rank_l = rank.tolist()
    lcp = [0] * (n + 1)
    h = 0
    for i in range(n):
        r = rank_l[i]
        if r > 1:
            j = sa_l[r - 2] - 1
            while i + h < n and j + h < n and data[i + h] == data[j + h]:
                h += 1
            lcp[r - 1] = h
            if h:
                h -= 1
        else:
            h = 0
    return np.array(lcp, dtype=np.uint32)


def _check_position(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise PositionError(f"position {k} outside 1..{n}")


def sus_scan(rank, lcp, k: int) -> tuple[int, int]:
    n = len(rank)
    _check_position(k, n)
    start, length = 1, n
    for i in range(1, k + 1):
        r = int(rank[i - 1])
        L = max(int(lcp[r - 1]), int(lcp[r]))
        if i + L > n:
            break
        cand = max(L + 1, k - i + 1)
        if cand < length:
            start, length = i, cand
    return start, length


def sus_scan_all(rank, lcp, k: int) -> list[tuple[int, int]]:
    _, length = sus_scan(rank, lcp, k)
    n = len(rank)
    out = []
    for i in range(1, k + 1):
        r = int(rank[i - 1])
        L = max(int(lcp[r - 1]), int(lcp[r]))
        if i + L > n:
            break
        if max(L + 1, k - i + 1) == length:
            out.append((i, length))
    return out


class SlsWalker:
    """Chunk list for the sequential shortest-LSUS walk.

    Nodes live in four parallel lists indexed by slot; ``head``/``tail``
    are slot cursors, -1 when the list is empty.  Slots before ``head``
    are dead and get reused once the list drains.
    """

    def __init__(self, rank, lcp):
        self.n = len(rank)
        self._rank = rank.tolist() if hasattr(rank, "tolist") else list(rank)
        self._lcp = lcp.tolist() if hasattr(lcp, "tolist") else list(lcp)
        self._cs: list[int] = []
        self._ce: list[int] = []
        self._st: list[int] = []
        self._ln: list[int] = []
        self.head = -1
        self.tail = -1
        self.next_k = 1
        self.merge_count = 0
        self.appended = 0
        self.peak_nodes = 0

    @property
    def capacity(self) -> int:
        return len(self._cs)

    def _put(self, slot, cs, ce, st, ln):
        if slot == len(self._cs):
            self._cs.append(cs)
            self._ce.append(ce)
            self._st.append(st)
            self._ln.append(ln)
        else:
            self._cs[slot] = cs
            self._ce[slot] = ce
            self._st[slot] = st
            self._ln[slot] = ln
        self.appended += 1

    def find_sls(self, k: int):
        _check_position(k, self.n)
        if k != self.next_k:
            raise WalkOrderError(f"expected step {self.next_k}, got {k}")
        return self._step(k)

    def _compact(self, head, tail):
        live = tail - head + 1
        for arr in (self._cs, self._ce, self._st, self._ln):
            arr[:live] = arr[head : tail + 1]
        return 0, live - 1

    def _step(self, k):
        n = self.n
        r = self._rank[k - 1]
        a = self._lcp[r - 1]
        b = self._lcp[r]
        L = a if a > b else b
        ce, st, ln = self._ce, self._st, self._ln
        if k + L <= n:
            end = k + L
            size = L + 1
            head, tail = self.head, self.tail
            if head < 0:
                self._put(0, k, end, k, size)
                head = tail = 0
                j = -1
            elif end > ce[tail]:
                if tail + 1 == len(ce) and head > 0 and 2 * (tail - head + 1) <= len(ce):
                    head, tail = self._compact(head, tail)
                self._put(tail + 1, ce[tail] + 1, end, k, size)
                tail += 1
                j = tail - 1
            else:
                j = tail
            # the new candidate absorbs every trailing node it beats strictly
            while j >= head and ln[j] > size:
                j -= 1
            if j < tail:
                self.merge_count += tail - j - 1
                ce[j + 1] = ce[tail]
                st[j + 1] = k
                ln[j + 1] = size
                tail = j + 1
            self.head, self.tail = head, tail
            live = tail - head + 1
            if live > self.peak_nodes:
                self.peak_nodes = live
        self.next_k = k + 1
        head = self.head
        if head < 0:
            return None
        result = (st[head], ln[head])
        if ce[head] <= k:
            head += 1
            if head > self.tail:
                self.head = self.tail = -1
            else:
                self.head = head
        else:
            self._cs[head] = k + 1
        return result

    def chunks(self) -> list[tuple[int, int, int, int]]:
        if self.head < 0:
            return []
        return [
            (self._cs[j], self._ce[j], self._st[j], self._ln[j])
            for j in range(self.head, self.tail + 1)
        ]


class EveryDriver:
    """Turns the shortest-LSUS stream into SUS answers, one block at a time."""

    def __init__(self, rank, lcp, all_tied: bool = False):
        self.walker = SlsWalker(rank, lcp)
        self.n = self.walker.n
        self.all_tied = all_tied
        self.next_k = 1
        self._prev = (0, 0)

    def fill(self, count: int):
        w = self.walker
        n = self.n
        k0 = self.next_k
        m = max(0, min(count, n - k0 + 1))
        starts = [0] * m
        lengths = [0] * m
        tied = self.all_tied
        offsets = [0] * (m + 1) if tied else None
        t_st: list[int] = []
        t_ln: list[int] = []
        ps, pl = self._prev
        for idx in range(m):
            k = k0 + idx
            sls = w._step(k)
            if k == 1 or ps + pl - 1 > k - 1:
                s, ln = sls
                from_sls = True
            elif sls is None:
                s, ln = ps, pl + 1
                from_sls = False
            elif sls[1] < pl + 1:
                s, ln = sls
                from_sls = True
            elif sls[1] == pl + 1:
                # tie: the extension starts further left, but sls_k ties too
                s, ln = ps, pl + 1
                from_sls = True
            else:
                s, ln = ps, pl + 1
                from_sls = False
            starts[idx] = s
            lengths[idx] = ln
            if tied:
                if from_sls:
                    if k > 1 and ps + pl - 1 == k - 1 and pl + 1 == ln:
                        t_st.append(ps)
                        t_ln.append(ln)
                    t_st.append(sls[0])
                    t_ln.append(sls[1])
                    if w.head >= 0:
                        for j in range(w.head, w.tail + 1):
                            lj = w._ln[j]
                            if lj != ln:
                                break
                            if w._st[j] != sls[0]:
                                t_st.append(w._st[j])
                                t_ln.append(lj)
                else:
                    t_st.append(s)
                    t_ln.append(ln)
                offsets[idx + 1] = len(t_st)
            ps, pl = s, ln
        self._prev = (ps, pl)
        self.next_k = k0 + m
        out = (np.array(starts, dtype=np.uint32), np.array(lengths, dtype=np.uint32))
        if not tied:
            return out + (None, None, None)
        return out + (
            np.array(offsets, dtype=np.int64),
            np.array(t_st, dtype=np.uint32),
            np.array(t_ln, dtype=np.uint32),
        )
