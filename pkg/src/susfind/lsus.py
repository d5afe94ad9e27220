"""Left-bounded shortest unique substrings, read straight off rank/lcp."""
from __future__ import annotations

from .errors import PositionError
from .intervals import Interval, MaybeInterval
from .structures import SuffixContext


def _check(ctx: SuffixContext, i: int) -> None:
    if not 1 <= i <= ctx.n:
        raise PositionError(f"position {i} outside 1..{ctx.n}")


def lsus_length_bound(ctx: SuffixContext, i: int) -> int:
    """Longest common prefix of suffix *i* with any other suffix."""
    _check(ctx, i)
    r = int(ctx.rank[i - 1])
    return max(int(ctx.lcp[r - 1]), int(ctx.lcp[r]))


def lsus_at(ctx: SuffixContext, i: int) -> MaybeInterval:
    """Shortest unique substring starting at *i*, or None when even the
    suffix ``S[i..n]`` repeats."""
    L = lsus_length_bound(ctx, i)
    if i + L > ctx.n:
        return None
    return Interval(i, L + 1)
