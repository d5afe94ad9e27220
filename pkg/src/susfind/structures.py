"""Suffix array, rank array and LCP array of a byte text.

Positions and ranks are 1-based values stored in 0-based numpy arrays of
``uint32``; ``lcp`` carries ``n + 1`` entries with zeros at both ends so
that ``max(lcp[r - 1], lcp[r])`` is valid for every rank ``r``.
"""
from __future__ import annotations

import os
import struct
from dataclasses import dataclass, field
from types import ModuleType
from typing import Union

import numpy as np

from . import _backend
from .errors import EmptyTextError, IndexFormatError, TextTooLargeError

MAX_TEXT_LENGTH = 2**32 - 1
INDEX_MAGIC = b"SUSIDX01"

TextLike = Union[bytes, bytearray, memoryview, str]


def as_text(text: TextLike) -> bytes:
    """Coerce *text* to bytes; ``str`` is UTF-8 encoded (positions stay byte offsets)."""
    if isinstance(text, str):
        return text.encode("utf-8")
    return bytes(text)


def _check_size(data: bytes) -> None:
    if not data:
        raise EmptyTextError("cannot index an empty text")
    if len(data) > MAX_TEXT_LENGTH:
        raise TextTooLargeError(f"text of {len(data)} bytes exceeds the {MAX_TEXT_LENGTH}-byte limit")


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.uint32)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class SuffixContext:
    """Immutable bundle of a text and its three index arrays."""

    text: bytes
    sa: np.ndarray
    rank: np.ndarray
    lcp: np.ndarray
    backend: str = field(default=_backend.DEFAULT.NAME)

    @property
    def n(self) -> int:
        return len(self.text)

    @property
    def kernels(self) -> ModuleType:
        return _backend.get(self.backend)

    def __repr__(self) -> str:
        return f"SuffixContext(n={self.n}, backend={self.backend!r})"


def build_suffix_array(text: TextLike, backend: str | None = None) -> np.ndarray:
    data = as_text(text)
    _check_size(data)
    return _frozen(_backend.get(backend).suffix_array(data))


def build_rank_array(sa: np.ndarray, backend: str | None = None) -> np.ndarray:
    sa = np.ascontiguousarray(sa, dtype=np.uint32)
    return _frozen(_backend.get(backend).rank_array(sa))


def build_lcp_array(text: TextLike, sa: np.ndarray, rank: np.ndarray,
                    backend: str | None = None) -> np.ndarray:
    data = as_text(text)
    sa = np.ascontiguousarray(sa, dtype=np.uint32)
    rank = np.ascontiguousarray(rank, dtype=np.uint32)
    return _frozen(_backend.get(backend).lcp_array(data, sa, rank))


def _check_shape_and_lcp(n: int, sa: np.ndarray, rank: np.ndarray, lcp: np.ndarray) -> None:
    if sa.shape != (n,) or rank.shape != (n,) or lcp.shape != (n + 1,):
        raise IndexFormatError("array lengths do not match the text length")
    if lcp[0] != 0 or lcp[n] != 0 or int(lcp.max()) >= n:
        raise IndexFormatError("lcp array violates its boundary or range constraints")


def check_arrays(n: int, sa: np.ndarray, rank: np.ndarray, lcp: np.ndarray) -> None:
    """Raise IndexFormatError unless the arrays have consistent shape and
    ``sa``/``rank`` are mutually inverse permutations of ``1..n``."""
    _check_shape_and_lcp(n, sa, rank, lcp)
    sa64 = sa.astype(np.int64)
    if sa64.min() < 1 or sa64.max() > n:
        raise IndexFormatError("suffix array holds positions outside 1..n")
    # rank[sa[j]] == j for every j forces sa to be injective, hence a permutation
    if not np.array_equal(rank[sa64 - 1], np.arange(1, n + 1, dtype=rank.dtype)):
        raise IndexFormatError("suffix array is not a permutation inverted by the rank array")


def build_context(text: TextLike, backend: str | None = None) -> SuffixContext:
    data = as_text(text)
    _check_size(data)
    kern = _backend.get(backend)
    sa = _frozen(kern.suffix_array(data))
    rank = _frozen(kern.rank_array(sa))
    lcp = _frozen(kern.lcp_array(data, sa, rank))
    # rank_array already rejects anything but a permutation and inverts it
    _check_shape_and_lcp(len(data), sa, rank, lcp)
    return SuffixContext(data, sa, rank, lcp, kern.NAME)


def save_index(ctx: SuffixContext, path: str | os.PathLike) -> None:
    """Write ``SUSIDX01 | n:u64 | sa | rank | lcp`` with every value as u64 LE."""
    with open(path, "wb") as fh:
        fh.write(INDEX_MAGIC)
        fh.write(struct.pack("<Q", ctx.n))
        for arr in (ctx.sa, ctx.rank, ctx.lcp):
            fh.write(arr.astype("<u8").tobytes())


def load_index(path: str | os.PathLike, text: TextLike,
               backend: str | None = None) -> SuffixContext:
    data = as_text(text)
    _check_size(data)
    with open(path, "rb") as fh:
        raw = fh.read()
    if len(raw) < 16 or raw[:8] != INDEX_MAGIC:
        raise IndexFormatError("not a SUSIDX01 index file")
    (n,) = struct.unpack_from("<Q", raw, 8)
    if n != len(data):
        raise IndexFormatError(f"index is for a {n}-byte text, input has {len(data)} bytes")
    if len(raw) != 16 + 8 * (3 * n + 1):
        raise IndexFormatError("index file length does not match its header")
    body = np.frombuffer(raw, dtype="<u8", offset=16)
    if int(body.max()) > MAX_TEXT_LENGTH:
        raise IndexFormatError("index values exceed the 32-bit range")
    sa = _frozen(body[:n])
    rank = _frozen(body[n : 2 * n])
    lcp = _frozen(body[2 * n :])
    check_arrays(n, sa, rank, lcp)
    return SuffixContext(data, sa, rank, lcp, _backend.get(backend).NAME)
