"""Time the compiled and pure-Python kernels side by side.

    python benchmarks/compare_backends.py --sizes 16384 65536 262144

Each stage (suffix array, rank, lcp, every-position walk) is timed
separately; the best of ``--repeat`` runs is reported.  Both backends must
produce identical SUS arrays or the script exits non-zero.
"""
import argparse
import sys
import time

import numpy as np

from susfind import BACKENDS
from susfind.textgen import english_like_text, random_text

CORPORA = {"random": random_text, "english": english_like_text}


def stages(kern, data, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        sa = kern.suffix_array(data)
        t1 = time.perf_counter()
        rank = kern.rank_array(sa)
        t2 = time.perf_counter()
        lcp = kern.lcp_array(data, sa, rank)
        t3 = time.perf_counter()
        starts, lengths, *_ = kern.EveryDriver(rank, lcp, False).fill(len(data))
        t4 = time.perf_counter()
        times = np.array([t1 - t0, t2 - t1, t3 - t2, t4 - t3])
        best = times if best is None else np.minimum(best, times)
    return best, (starts, lengths)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[16384, 65536, 262144])
    ap.add_argument("--corpus", choices=sorted(CORPORA), default="random")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if "c" not in BACKENDS:
        print("compiled backend not built; only the fallback is available", file=sys.stderr)
    print(f"{'bytes':>10} {'backend':>7} {'sa':>9} {'rank':>9} {'lcp':>9} {'walk':>9} {'total':>9} {'speedup':>8}")
    for size in args.sizes:
        data = CORPORA[args.corpus](size, seed=size)
        results = {name: stages(kern, data, args.repeat) for name, kern in BACKENDS.items()}
        ref = results["python"][0].sum()
        outputs = [r[1] for r in results.values()]
        for other in outputs[1:]:
            if not all(np.array_equal(a, b) for a, b in zip(outputs[0], other)):
                print(f"backends disagree at size {size}", file=sys.stderr)
                return 1
        for name, (times, _) in results.items():
            cells = " ".join(f"{t:9.4f}" for t in times)
            print(f"{size:>10} {name:>7} {cells} {times.sum():9.4f} {ref / times.sum():7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
