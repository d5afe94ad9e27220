"""Sequential walk producing the shortest LSUS covering each position.

Positions ahead of the walk are grouped into chunks sharing one candidate
LSUS.  Chunks are only appended at the tail, merged at the tail, or
consumed at the head, so a full walk costs O(n) in total.
"""
from __future__ import annotations

from .intervals import ChunkNode, Interval, MaybeInterval
from .structures import SuffixContext


class SlsWalker:
    """Single-owner walker; call :meth:`find_sls` with k = 1, 2, ..., n."""

    def __init__(self, ctx: SuffixContext):
        self.ctx = ctx
        self._impl = ctx.kernels.SlsWalker(ctx.rank, ctx.lcp)

    @property
    def next_k(self) -> int:
        return self._impl.next_k

    @property
    def merge_count(self) -> int:
        """Nodes absorbed by merges so far (never exceeds n)."""
        return self._impl.merge_count

    @property
    def nodes_appended(self) -> int:
        return self._impl.appended

    @property
    def peak_nodes(self) -> int:
        return self._impl.peak_nodes

    @property
    def capacity(self) -> int:
        """Node slots currently allocated."""
        return self._impl.capacity

    def find_sls(self, k: int) -> MaybeInterval:
        """Return the shortest LSUS covering *k* (leftmost on ties), or None.

        Raises PositionError for k outside ``1..n`` and WalkOrderError when
        k is not the next step.
        """
        found = self._impl.find_sls(k)
        return None if found is None else Interval(*found)

    def peek_chunks(self) -> list[ChunkNode]:
        return [ChunkNode(*c) for c in self._impl.chunks()]

    def __repr__(self) -> str:
        return f"SlsWalker(next_k={self.next_k}, chunks={len(self._impl.chunks())})"


def new_walker(ctx: SuffixContext) -> SlsWalker:
    return SlsWalker(ctx)
