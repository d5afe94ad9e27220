"""``susfind`` command line: build / query / every / bench.

Output is tab-separated ``position, start, length[, text]`` with 1-based
positions.  Exit codes: 0 ok, 1 usage, 2 I/O or index file problem,
3 position out of range.
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import BinaryIO, Iterable, Sequence

from . import _backend, oracle
from .errors import EmptyTextError, IndexFormatError, PositionError
from .every import BLOCK, sus_every_arrays
from .intervals import Interval
from .query import all_sus_at, sus_at
from .structures import SuffixContext, build_context, load_index, save_index

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_RANGE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="susfind", description="Shortest unique substrings covering text positions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, index_in=True):
        sp.add_argument("input", help="input file, or - for stdin (read as raw bytes)")
        sp.add_argument("--strip-trailing-newline", action="store_true",
                        help="drop one trailing \\n (or \\r\\n) before indexing")
        sp.add_argument("--backend", choices=["auto", "c", "python"], default="auto")
        if index_in:
            sp.add_argument("--index-in", metavar="PATH", help="load a prebuilt index instead of building")

    def output(sp):
        sp.add_argument("--all", action="store_true", help="one row per tied SUS")
        sp.add_argument("--show-text", action="store_true", help="append the raw substring bytes")
        sp.add_argument("--header", action="store_true")
        sp.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)

    b = sub.add_parser("build", help="build and serialize the index")
    common(b, index_in=False)
    b.add_argument("--index-out", metavar="PATH", required=True)

    q = sub.add_parser("query", help="SUS covering one position")
    common(q)
    q.add_argument("-k", type=int, required=True, metavar="POS", help="1-based position")
    output(q)

    e = sub.add_parser("every", help="SUS covering every position")
    common(e)
    output(e)

    bn = sub.add_parser("bench", help="time index build and the every-position pass")
    common(bn, index_in=False)
    bn.add_argument("--repeat", type=int, default=1, help="report the fastest of N runs")
    bn.add_argument("--series", type=int, default=1, metavar="N",
                    help="also time the prefixes of size n/2, n/4, ... (N sizes in total)")
    return p


def read_input(path: str, strip_newline: bool) -> bytes:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    if strip_newline and data.endswith(b"\n"):
        data = data[:-2] if data.endswith(b"\r\n") else data[:-1]
    return data


def _context(args, data: bytes) -> SuffixContext:
    backend = None if args.backend == "auto" else args.backend
    if getattr(args, "index_in", None):
        return load_index(args.index_in, data, backend=backend)
    return build_context(data, backend=backend)


def _rows(position: int, ivs: Iterable[Interval], text: bytes | None) -> bytes:
    if text is None:
        return b"".join(b"%d\t%d\t%d\n" % (position, s, ln) for s, ln in ivs)
    return b"".join(
        b"%d\t%d\t%d\t%s\n" % (position, s, ln, text[s - 1 : s - 1 + ln]) for s, ln in ivs
    )


def _header(out: BinaryIO, args) -> None:
    if args.header:
        out.write(b"position\tstart\tlength\ttext\n" if args.show_text else b"position\tstart\tlength\n")


def run_query(args, data: bytes, out: BinaryIO) -> int:
    n = len(data)
    k = args.k
    if not 1 <= k <= n:
        raise PositionError(f"position {k} outside 1..{n}")
    if args.oracle:
        found = oracle.all_sus_at_naive(data, k)
    else:
        ctx = _context(args, data)
        found = all_sus_at(ctx, k) if args.all else [sus_at(ctx, k)]
    if not args.all:
        found = found[:1]
    _header(out, args)
    out.write(_rows(k, found, data if args.show_text else None))
    return EXIT_OK


def _every_records(args, data: bytes):
    """Yield (position, [Interval, ...]) in position order."""
    if args.oracle:
        for k, tied in enumerate(oracle.all_sus_every_naive(data), 1):
            yield k, tied if args.all else tied[:1]
        return
    ctx = _context(args, data)
    driver = ctx.kernels.EveryDriver(ctx.rank, ctx.lcp, args.all)
    while driver.next_k <= ctx.n:
        k0 = driver.next_k
        starts, lengths, offsets, t_st, t_ln = driver.fill(BLOCK)
        if args.all:
            t_st, t_ln, off = t_st.tolist(), t_ln.tolist(), offsets.tolist()
            for idx in range(len(starts)):
                a, b = off[idx], off[idx + 1]
                yield k0 + idx, zip(t_st[a:b], t_ln[a:b])
        else:
            for idx, (s, ln) in enumerate(zip(starts.tolist(), lengths.tolist())):
                yield k0 + idx, ((s, ln),)


def run_every(args, data: bytes, out: BinaryIO) -> int:
    _header(out, args)
    text = data if args.show_text else None
    buf = []
    for k, ivs in _every_records(args, data):
        buf.append(_rows(k, ivs, text))
        if len(buf) >= 4096:
            out.write(b"".join(buf))
            buf.clear()
    out.write(b"".join(buf))
    return EXIT_OK


def run_build(args, data: bytes, out: BinaryIO) -> int:
    ctx = _context(args, data)
    save_index(ctx, args.index_out)
    return EXIT_OK


def bench_once(data: bytes, backend: str | None, repeat: int = 1) -> dict:
    best_build = best_every = float("inf")
    run = None
    for _ in range(max(1, repeat)):
        t0 = time.perf_counter()
        ctx = build_context(data, backend=backend)
        t1 = time.perf_counter()
        run = sus_every_arrays(ctx)
        t2 = time.perf_counter()
        best_build = min(best_build, t1 - t0)
        best_every = min(best_every, t2 - t1)
    total = best_build + best_every
    return {
        "backend": _backend.get(backend).NAME,
        "bytes": len(data),
        "build_seconds": best_build,
        "every_seconds": best_every,
        "total_seconds": total,
        "mb_per_second": len(data) / 1e6 / total if total > 0 else float("inf"),
        "peak_nodes": run.peak_nodes,
        "node_capacity": run.node_capacity,
        "nodes_appended": run.nodes_appended,
        "merge_count": run.merge_count,
    }


def run_bench(args, data: bytes, out: BinaryIO) -> int:
    backend = None if args.backend == "auto" else args.backend
    sizes = [len(data) >> j for j in range(max(1, args.series) - 1, -1, -1)]
    sizes = [s for s in sizes if s > 0]
    prev = None
    for size in sizes:
        rep = bench_once(data[:size], backend, args.repeat)
        lines = [f"{key}: {val:.6f}" if isinstance(val, float) else f"{key}: {val}" for key, val in rep.items()]
        if prev is not None:
            lines.append(f"ratio_vs_half: {rep['total_seconds'] / prev:.3f}")
        prev = rep["total_seconds"]
        out.write(("\n".join(lines) + "\n\n").encode())
    return EXIT_OK


COMMANDS = {"build": run_build, "query": run_query, "every": run_every, "bench": run_bench}


def main(argv: Sequence[str] | None = None, stdout: BinaryIO | None = None) -> int:
    out = stdout if stdout is not None else sys.stdout.buffer
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        data = read_input(args.input, args.strip_trailing_newline)
    except OSError as exc:
        print(f"susfind: cannot read {args.input}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    try:
        if not data:
            raise EmptyTextError("input is empty")
        status = COMMANDS[args.command](args, data, out)
    except PositionError as exc:
        print(f"susfind: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except EmptyTextError as exc:
        print(f"susfind: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, IndexFormatError) as exc:
        print(f"susfind: {exc}", file=sys.stderr)
        return EXIT_IO
    out.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
