"""Deterministic synthetic corpora for tests and benchmarks."""
from __future__ import annotations

import numpy as np

_WORDS = (
    "the of and to in a is that for it as was with be by on not he i this are or his from "
    "at which but have an they you were her she there been one all we their has would when "
    "what if will more no out so up said can about into them some could time him only other "
    "then its new two may first any like now my over such our man me even most made after "
    "also did many before must through back years where much your way well down should "
    "because each just those people how too little state good very make world still own see "
    "men work long get here between both life being under never day same another know while "
    "last might us great old year off come since against go came right used take three"
).split()


def random_text(n: int, alphabet: bytes = b"acgt", seed: int = 0) -> bytes:
    """Uniform i.i.d. bytes drawn from *alphabet*."""
    rng = np.random.default_rng(seed)
    table = np.frombuffer(alphabet, dtype=np.uint8)
    return table[rng.integers(0, len(table), size=n)].tobytes()


def english_like_text(n: int, seed: int = 0) -> bytes:
    """Zipf-weighted words with sentence punctuation, truncated to *n* bytes."""
    rng = np.random.default_rng(seed)
    weights = 1.0 / np.arange(1, len(_WORDS) + 1)
    weights /= weights.sum()
    vocab = [w.encode() for w in _WORDS]
    out = bytearray()
    while len(out) < n:
        count = int(rng.integers(6, 20))
        picks = rng.choice(len(vocab), size=count, p=weights)
        sentence = b" ".join(vocab[i] for i in picks)
        out += sentence[:1].upper() + sentence[1:] + b". "
    return bytes(out[:n])
