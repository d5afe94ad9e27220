"""Brute-force reference answers built only from substring window scans.

Nothing here touches suffix, rank or LCP arrays, so a bug in the indexed
path cannot hide behind a matching bug in the reference.  The per-position
functions follow the definitions literally; the ``*_every_naive`` variants
answer all positions at once by counting every window of each length,
which keeps end-to-end checks on files of a few KB practical.
"""
from __future__ import annotations

from collections import Counter

from .errors import PositionError
from .intervals import Interval, MaybeInterval
from .structures import TextLike, as_text


def _check(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise PositionError(f"position {k} outside 1..{n}")


def is_unique_naive(text: TextLike, start: int, length: int) -> bool:
    """True iff ``text[start .. start+length-1]`` occurs exactly once."""
    data = as_text(text)
    n = len(data)
    if length < 1 or start < 1 or start + length - 1 > n:
        raise ValueError(f"invalid interval ({start}, {length}) for text of length {n}")
    sub = data[start - 1 : start - 1 + length]
    hits = 0
    for s in range(n - length + 1):
        if data[s : s + length] == sub:
            hits += 1
            if hits > 1:
                return False
    return hits == 1


def lsus_at_naive(text: TextLike, i: int) -> MaybeInterval:
    data = as_text(text)
    n = len(data)
    _check(i, n)
    for length in range(1, n - i + 2):
        if is_unique_naive(data, i, length):
            return Interval(i, length)
    return None


def all_sus_at_naive(text: TextLike, k: int) -> list[Interval]:
    """All minimal-length unique substrings covering *k*, ascending by start."""
    data = as_text(text)
    n = len(data)
    _check(k, n)
    for length in range(1, n + 1):
        found = [
            Interval(s, length)
            for s in range(max(1, k - length + 1), min(k, n - length + 1) + 1)
            if is_unique_naive(data, s, length)
        ]
        if found:
            return found
    raise AssertionError("the whole text is always unique")  # pragma: no cover


def sus_at_naive(text: TextLike, k: int) -> Interval:
    return all_sus_at_naive(text, k)[0]


def _windows(data: bytes, m: int) -> Counter:
    return Counter(data[s : s + m] for s in range(len(data) - m + 1))


def lsus_every_naive(text: TextLike) -> list[MaybeInterval]:
    data = as_text(text)
    n = len(data)
    out: list[MaybeInterval] = [None] * n
    pending = list(range(1, n + 1))
    m = 1
    while pending:
        counts = _windows(data, m)
        still = []
        for i in pending:
            if i + m - 1 > n:
                continue  # the suffix itself repeats
            if counts[data[i - 1 : i - 1 + m]] == 1:
                out[i - 1] = Interval(i, m)
            else:
                still.append(i)
        pending = still
        m += 1
    return out


def all_sus_every_naive(text: TextLike) -> list[list[Interval]]:
    """``all_sus_at_naive`` for k = 1..n, sweeping lengths upward once."""
    data = as_text(text)
    n = len(data)
    best = [0] * (n + 1)
    found: list[list[Interval]] = [[] for _ in range(n + 1)]
    open_positions = n
    m = 0
    while open_positions:
        m += 1
        counts = _windows(data, m)
        for s in range(1, n - m + 2):
            if counts[data[s - 1 : s - 1 + m]] != 1:
                continue
            for p in range(s, s + m):
                if best[p] == 0:
                    best[p] = m
                    open_positions -= 1
                if best[p] == m:
                    found[p].append(Interval(s, m))
    return found[1:]


def sls_every_naive(text: TextLike) -> list[MaybeInterval]:
    """Shortest (then leftmost) LSUS covering each position, or None."""
    lsus = lsus_every_naive(text)
    out: list[MaybeInterval] = []
    for k in range(1, len(lsus) + 1):
        cover = [iv for iv in lsus[:k] if iv is not None and iv.end >= k]
        out.append(min(cover, key=lambda iv: (iv.length, iv.start)) if cover else None)
    return out
