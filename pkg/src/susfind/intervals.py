"""Result types shared by every query path.

All coordinates are 1-based and inclusive, matching the usual
stringology notation ``S[i..j]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional


class Interval(NamedTuple):
    """A substring ``S[start .. start+length-1]``."""

    start: int
    length: int

    @property
    def end(self) -> int:
        return self.start + self.length - 1

    def covers(self, k: int) -> bool:
        return self.start <= k <= self.end

    def slice(self, text: bytes) -> bytes:
        return text[self.start - 1 : self.end]


#: ``None`` stands for "does not exist".
MaybeInterval = Optional[Interval]


class ChunkNode(NamedTuple):
    """A run of positions sharing one candidate LSUS."""

    chunk_start: int
    chunk_end: int
    cand_start: int
    cand_length: int


@dataclass(frozen=True)
class SusRecord:
    position: int
    leftmost: Interval
    all_tied: Optional[tuple[Interval, ...]] = None
