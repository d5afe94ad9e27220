import io
import os
import subprocess
import sys

import pytest

from susfind import cli
from susfind.textgen import english_like_text, random_text


def run(argv, stdin=None):
    out = io.BytesIO()
    code = cli.main(argv, stdout=out)
    return code, out.getvalue()


@pytest.fixture
def abcbb(tmp_path):
    p = tmp_path / "abcbb.txt"
    p.write_bytes(b"abcbb")
    return str(p)


@pytest.fixture
def one(tmp_path):
    p = tmp_path / "a.txt"
    p.write_bytes(b"a")
    return str(p)


def test_query_all(abcbb):
    assert run(["query", abcbb, "-k", "2", "--all"]) == (0, b"2\t1\t2\n2\t2\t2\n")


def test_query_single(abcbb):
    assert run(["query", abcbb, "-k", "4"]) == (0, b"4\t3\t2\n")
    assert run(["query", abcbb, "-k", "2"]) == (0, b"2\t1\t2\n")


@pytest.mark.parametrize("k", ["0", "2", "-1"])
def test_query_out_of_range(one, k):
    assert run(["query", one, "-k", k])[0] == 3


def test_every(abcbb, one):
    assert run(["every", abcbb]) == (0, b"1\t1\t1\n2\t1\t2\n3\t3\t1\n4\t3\t2\n5\t4\t2\n")
    code, out = run(["every", abcbb, "--all"])
    assert code == 0
    assert out.splitlines() == [
        b"1\t1\t1", b"2\t1\t2", b"2\t2\t2", b"3\t3\t1", b"4\t3\t2", b"4\t4\t2", b"5\t4\t2",
    ]
    assert run(["every", one]) == (0, b"1\t1\t1\n")


def test_header_and_text(abcbb):
    code, out = run(["query", abcbb, "-k", "2", "--all", "--header", "--show-text"])
    assert code == 0
    assert out == b"position\tstart\tlength\ttext\n2\t1\t2\tab\n2\t2\t2\tbc\n"
    assert run(["every", abcbb, "--header"])[1].startswith(b"position\tstart\tlength\n1\t")


def test_usage_errors(abcbb):
    assert run([])[0] == 1
    assert run(["query", abcbb])[0] == 1  # -k missing
    assert run(["every", abcbb, "--backend", "fortran"])[0] == 1
    assert run(["frobnicate", abcbb])[0] == 1


def test_missing_file(tmp_path):
    assert run(["every", str(tmp_path / "nope")])[0] == 2


def test_empty_input(tmp_path):
    p = tmp_path / "empty"
    p.write_bytes(b"")
    assert run(["every", str(p)])[0] == 1
    p.write_bytes(b"\n")
    assert run(["every", str(p), "--strip-trailing-newline"])[0] == 1


def test_strip_trailing_newline(tmp_path):
    p = tmp_path / "nl"
    p.write_bytes(b"abcbb\n")
    assert run(["every", str(p)])[1].count(b"\n") == 6
    _, out = run(["every", str(p), "--strip-trailing-newline"])
    assert out == b"1\t1\t1\n2\t1\t2\n3\t3\t1\n4\t3\t2\n5\t4\t2\n"
    p.write_bytes(b"abcbb\r\n")
    assert run(["every", str(p), "--strip-trailing-newline"])[1] == out


def test_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "susfind", "query", "-", "-k", "2", "--all"],
        input=b"abcbb", capture_output=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == b"2\t1\t2\n2\t2\t2\n"


def test_raw_bytes_with_show_text(tmp_path):
    p = tmp_path / "bin"
    p.write_bytes(b"\x00\xff\x00\t")
    code, out = run(["every", str(p), "--show-text"])
    assert code == 0
    assert out.split(b"\n")[0] == b"1\t1\t2\t\x00\xff"


def test_index_round_trip(tmp_path):
    data = english_like_text(5000, seed=1)
    src = tmp_path / "t.txt"
    src.write_bytes(data)
    idx = tmp_path / "t.idx"
    assert run(["build", str(src), "--index-out", str(idx)]) == (0, b"")
    fresh = run(["every", str(src), "--all"])
    assert run(["every", str(src), "--all", "--index-in", str(idx)]) == fresh
    assert run(["query", str(src), "-k", "77", "--index-in", str(idx)]) == run(["query", str(src), "-k", "77"])


def test_index_errors(tmp_path):
    src = tmp_path / "t.txt"
    src.write_bytes(b"abcbb")
    idx = tmp_path / "t.idx"
    run(["build", str(src), "--index-out", str(idx)])
    other = tmp_path / "u.txt"
    other.write_bytes(b"abcbbb")
    assert run(["every", str(other), "--index-in", str(idx)])[0] == 2
    junk = tmp_path / "junk.idx"
    junk.write_bytes(b"not an index at all")
    assert run(["every", str(src), "--index-in", str(junk)])[0] == 2
    assert run(["every", str(src), "--index-in", str(tmp_path / "absent.idx")])[0] == 2
    assert run(["build", str(src), "--index-out", str(tmp_path / "no" / "dir.idx")])[0] == 2


@pytest.mark.parametrize("flags", [[], ["--all"], ["--all", "--show-text"]])
def test_oracle_mode_matches(tmp_path, flags):
    p = tmp_path / "t"
    p.write_bytes(random_text(600, alphabet=b"ab", seed=5))
    assert run(["every", str(p)] + flags + ["--oracle"]) == run(["every", str(p)] + flags)
    for k in ("1", "300", "600"):
        q = ["query", str(p), "-k", k] + flags
        assert run(q + ["--oracle"]) == run(q)


def test_backends_give_same_bytes(tmp_path):
    p = tmp_path / "t"
    p.write_bytes(english_like_text(3000, seed=2))
    outs = {run(["every", str(p), "--all", "--backend", b])[1] for b in cli._backend.BACKENDS}
    assert len(outs) == 1


def test_bench_report(tmp_path):
    p = tmp_path / "t"
    data = random_text(20000, seed=3)
    p.write_bytes(data)
    code, out = run(["bench", str(p), "--series", "2"])
    assert code == 0
    blocks = [b for b in out.decode().split("\n\n") if b.strip()]
    assert len(blocks) == 2
    fields = [dict(line.split(": ", 1) for line in b.splitlines()) for b in blocks]
    assert int(fields[0]["bytes"]) == 10000 and int(fields[1]["bytes"]) == 20000
    assert "ratio_vs_half" in fields[1]
    for f in fields:
        assert int(f["merge_count"]) <= int(f["bytes"])
        assert int(f["peak_nodes"]) <= int(f["node_capacity"]) <= int(f["bytes"])
        assert float(f["mb_per_second"]) > 0


def test_bench_non_timing_fields_are_deterministic():
    data = random_text(30000, seed=4)
    timing = {"build_seconds", "every_seconds", "total_seconds", "mb_per_second"}
    a, b = (cli.bench_once(data, None) for _ in range(2))
    assert {k: v for k, v in a.items() if k not in timing} == {k: v for k, v in b.items() if k not in timing}


def test_every_is_deterministic_across_processes(tmp_path):
    p = tmp_path / "t"
    p.write_bytes(english_like_text(4000, seed=6))
    cmd = [sys.executable, "-m", "susfind", "every", str(p), "--all", "--show-text"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True, env=dict(os.environ, PYTHONHASHSEED="7")).stdout
    assert first == second and first
