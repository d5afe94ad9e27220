import random

import pytest
from hypothesis import strategies as st

from susfind import BACKENDS


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return request.param


def small_texts(max_size=60):
    """Short byte strings over 1-, 2-, 4- and 26-letter alphabets."""
    return st.sampled_from([b"a", b"ab", b"acgt", b"abcdefghijklmnopqrstuvwxyz"]).flatmap(
        lambda alpha: st.lists(st.sampled_from(list(alpha)), min_size=1, max_size=max_size).map(bytes)
    )


def random_texts(count, max_n, seed, alphabets=(1, 2, 4, 26)):
    rng = random.Random(seed)
    letters = b"abcdefghijklmnopqrstuvwxyz"
    for _ in range(count):
        a = rng.choice(alphabets)
        n = rng.randint(1, max_n)
        yield bytes(rng.choice(letters[:a]) for _ in range(n))
