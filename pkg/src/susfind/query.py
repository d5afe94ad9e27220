"""SUS queries for a single position, O(k) after indexing."""
from __future__ import annotations

from .intervals import Interval
from .structures import SuffixContext


def sus_at(ctx: SuffixContext, k: int) -> Interval:
    """Shortest unique substring covering *k*; the leftmost one on ties.

    Scans ``lsus_1 .. lsus_k`` (each stretched to reach *k* if needed) and
    stops at the first missing LSUS, since none after it exist either.
    """
    return Interval(*ctx.kernels.sus_scan(ctx.rank, ctx.lcp, k))


def all_sus_at(ctx: SuffixContext, k: int) -> list[Interval]:
    """Every shortest unique substring covering *k*, by ascending start."""
    return [Interval(s, ln) for s, ln in ctx.kernels.sus_scan_all(ctx.rank, ctx.lcp, k)]
