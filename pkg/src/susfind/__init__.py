"""Shortest unique substrings covering text positions, in linear time.

Build a :class:`SuffixContext` once, then ask for the SUS covering one
position (:func:`sus_at`, :func:`all_sus_at`) or every position
(:func:`sus_every`, :func:`all_sus_every`).
"""
from ._backend import BACKENDS, DEFAULT as _DEFAULT
from .errors import (
    EmptyTextError,
    IndexFormatError,
    PositionError,
    SusError,
    TextTooLargeError,
    WalkOrderError,
)
from .every import (
    EveryRun,
    all_sus_every,
    iter_all_sus_every,
    iter_sus_every,
    sus_every,
    sus_every_arrays,
)
from .intervals import ChunkNode, Interval, MaybeInterval, SusRecord
from .lsus import lsus_at, lsus_length_bound
from .query import all_sus_at, sus_at
from .structures import (
    SuffixContext,
    build_context,
    build_lcp_array,
    build_rank_array,
    build_suffix_array,
    load_index,
    save_index,
)
from .walker import SlsWalker, new_walker

#: Name of the kernel backend chosen at import ("c" or "python").
BACKEND = _DEFAULT.NAME

__all__ = [
    "BACKEND", "BACKENDS", "ChunkNode", "EmptyTextError", "EveryRun", "IndexFormatError",
    "Interval", "MaybeInterval", "PositionError", "SlsWalker", "SuffixContext", "SusError",
    "SusRecord", "TextTooLargeError", "WalkOrderError", "all_sus_at", "all_sus_every",
    "build_context", "build_lcp_array", "build_rank_array", "build_suffix_array",
    "iter_all_sus_every", "iter_sus_every", "load_index", "lsus_at", "lsus_length_bound",
    "new_walker", "save_index", "sus_at", "sus_every", "sus_every_arrays",
]
