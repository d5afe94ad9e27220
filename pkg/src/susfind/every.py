"""Shortest unique substrings for every position in one O(n) pass.

Each ``sus_k`` is either the shortest LSUS covering k (streamed by the
walker) or ``sus_{k-1}`` grown by one character, and the second option is
only possible when ``sus_{k-1}`` ends exactly at ``k - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .intervals import Interval, SusRecord
from .structures import SuffixContext

BLOCK = 1 << 16


@dataclass
class EveryRun:
    """Leftmost SUS of every position as two arrays, plus walk counters."""

    starts: np.ndarray
    lengths: np.ndarray
    merge_count: int
    nodes_appended: int
    peak_nodes: int
    node_capacity: int

    def __len__(self) -> int:
        return len(self.starts)

    def __getitem__(self, k: int) -> Interval:
        """1-based access, matching position numbering."""
        return Interval(int(self.starts[k - 1]), int(self.lengths[k - 1]))


def _driver(ctx: SuffixContext, all_tied: bool):
    return ctx.kernels.EveryDriver(ctx.rank, ctx.lcp, all_tied)


def sus_every_arrays(ctx: SuffixContext) -> EveryRun:
    driver = _driver(ctx, False)
    starts, lengths, *_ = driver.fill(ctx.n)
    w = driver.walker
    return EveryRun(starts, lengths, w.merge_count, w.appended, w.peak_nodes, w.capacity)


def iter_sus_every(ctx: SuffixContext, block: int = BLOCK) -> Iterator[Interval]:
    driver = _driver(ctx, False)
    while driver.next_k <= ctx.n:
        starts, lengths, *_ = driver.fill(block)
        yield from map(Interval, starts.tolist(), lengths.tolist())


def sus_every(ctx: SuffixContext) -> list[Interval]:
    """Leftmost SUS for k = 1..n (entry k - 1 answers position k)."""
    return list(iter_sus_every(ctx))


def iter_all_sus_every(ctx: SuffixContext, block: int = BLOCK) -> Iterator[SusRecord]:
    """Yield one record per position with every tied SUS, ascending by start."""
    driver = _driver(ctx, True)
    while driver.next_k <= ctx.n:
        k0 = driver.next_k
        starts, lengths, offsets, t_st, t_ln = driver.fill(block)
        t_st = t_st.tolist()
        t_ln = t_ln.tolist()
        off = offsets.tolist()
        for idx, (s, ln) in enumerate(zip(starts.tolist(), lengths.tolist())):
            tied = tuple(map(Interval, t_st[off[idx] : off[idx + 1]], t_ln[off[idx] : off[idx + 1]]))
            yield SusRecord(k0 + idx, Interval(s, ln), tied)


def all_sus_every(ctx: SuffixContext) -> list[SusRecord]:
    return list(iter_all_sus_every(ctx))
