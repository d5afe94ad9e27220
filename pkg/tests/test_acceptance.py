"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) or through pytest; the
lines are printed even when pytest captures output.
"""
import gc
import random
import sys
import time

import pytest

from susfind import (
    BACKEND,
    Interval,
    all_sus_at,
    all_sus_every,
    build_context,
    lsus_at,
    new_walker,
    sus_at,
    sus_every,
    sus_every_arrays,
)
from susfind.oracle import (
    all_sus_at_naive,
    all_sus_every_naive,
    lsus_at_naive,
    lsus_every_naive,
    sls_every_naive,
    sus_at_naive,
)
from susfind.textgen import english_like_text, random_text

MB = 1 << 20


def report(number, ok, detail, capsys=None, status=None):
    line = f"ACCEPTANCE {number}: {status or ('PASS' if ok else 'FAIL')} - {detail}"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok


def _texts(count, max_n, seed, alphabets):
    rng = random.Random(seed)
    letters = b"abcdefghijklmnopqrstuvwxyz"
    for _ in range(count):
        a = rng.choice(alphabets)
        n = rng.randint(1, max_n)
        yield bytes(rng.choice(letters[:a]) for _ in range(n))


def check_oracle_equivalence(count=1000, seed=2024):
    mismatches = []
    literal_rng = random.Random(seed + 1)
    t0 = time.perf_counter()
    for text in _texts(count, 200, seed, (1, 2, 4, 26)):
        n = len(text)
        ctx = build_context(text)
        all_ref = all_sus_every_naive(text)
        lsus_ref = lsus_every_naive(text)
        w = new_walker(ctx)
        got = {
            "sus_at": [sus_at(ctx, k) for k in range(1, n + 1)],
            "all_sus_at": [all_sus_at(ctx, k) for k in range(1, n + 1)],
            "sus_every": sus_every(ctx),
            "all_sus_every": [list(r.all_tied) for r in all_sus_every(ctx)],
            "lsus_at": [lsus_at(ctx, i) for i in range(1, n + 1)],
            "find_sls": [w.find_sls(k) for k in range(1, n + 1)],
        }
        want = {
            "sus_at": [t[0] for t in all_ref],
            "all_sus_at": all_ref,
            "sus_every": [t[0] for t in all_ref],
            "all_sus_every": all_ref,
            "lsus_at": lsus_ref,
            "find_sls": sls_every_naive(text),
        }
        for name in got:
            if got[name] != want[name]:
                mismatches.append((name, text))
        # the batch oracles are themselves spot-checked against the literal definitions
        for k in literal_rng.sample(range(1, n + 1), min(n, 3)):
            if (all_sus_at_naive(text, k) != all_ref[k - 1] or sus_at_naive(text, k) != all_ref[k - 1][0]
                    or lsus_at_naive(text, k) != lsus_ref[k - 1]):
                mismatches.append(("oracle", text))
    return mismatches, time.perf_counter() - t0


def test_1_oracle_equivalence(capsys):
    mismatches, secs = check_oracle_equivalence()
    detail = f"1000 texts, n<=200, sigma in {{1,2,4,26}}, backend={BACKEND}: {len(mismatches)} mismatches, {secs:.1f}s"
    assert report(1, not mismatches and secs < 120, detail, capsys), mismatches[:3]


def check_worked_example():
    ctx = build_context(b"abcbb")
    ok = all_sus_at(ctx, 2) == [Interval(1, 2), Interval(2, 2)]
    ok &= [iv.slice(b"abcbb") for iv in all_sus_at(ctx, 2)] == [b"ab", b"bc"]
    ok &= sus_at(ctx, 2) == Interval(1, 2)
    ctx = build_context(b"abcabc")
    ok &= [lsus_at(ctx, i) for i in (4, 5, 6)] == [None, None, None]
    return ok


def test_2_worked_example(capsys):
    ok = check_worked_example()
    assert report(2, ok, 'abcbb k=2 -> {"ab","bc"} leftmost "ab"; abcabc lsus_4..6 absent', capsys)


def _timed(fn):
    gc.collect()
    t0 = time.perf_counter()
    out = fn()
    return time.perf_counter() - t0, out


def check_linearity(sizes=(1 * MB, 2 * MB, 4 * MB, 8 * MB), repeat=9, limit=2.5):
    """Time build+every (pipeline) and every alone (walk) at doubling sizes.

    Sizes are interleaved within each round so a slow spell on a shared
    machine hits every size rather than one, and each size keeps its best
    round.
    """
    rows = []
    ok = True
    corpora = {
        "random": random_text(sizes[-1], seed=11),
        "english": english_like_text(sizes[-1], seed=12),
    }
    for kind, full in corpora.items():
        texts = [full[:n] for n in sizes]
        build_s = [float("inf")] * len(sizes)
        walk_s = [float("inf")] * len(sizes)
        total_s = [float("inf")] * len(sizes)
        runs = [None] * len(sizes)
        for _ in range(repeat):
            for j, text in enumerate(texts):
                b, ctx = _timed(lambda: build_context(text))
                w, runs[j] = _timed(lambda: sus_every_arrays(ctx))
                build_s[j] = min(build_s[j], b)
                walk_s[j] = min(walk_s[j], w)
                total_s[j] = min(total_s[j], b + w)
                del ctx
        for j, n in enumerate(sizes):
            run = runs[j]
            row = {
                "kind": kind, "n": n, "pipeline_s": total_s[j], "walk_s": walk_s[j],
                "peak": run.peak_nodes, "capacity": run.node_capacity, "merges": run.merge_count,
                "appended": run.nodes_appended,
            }
            row["bounds_ok"] = max(run.peak_nodes, run.node_capacity, run.merge_count, run.nodes_appended) <= n
            if j:
                row["ratio"] = total_s[j] / total_s[j - 1]
                row["walk_ratio"] = walk_s[j] / walk_s[j - 1]
                ok &= row["ratio"] <= limit and row["walk_ratio"] <= limit
            ok &= row["bounds_ok"]
            rows.append(row)
    return ok, rows


def _fmt_rows(rows):
    out = []
    for r in rows:
        ratio = f" ratio={r['ratio']:.2f} walk_ratio={r['walk_ratio']:.2f}" if "ratio" in r else ""
        out.append(
            f"  {r['kind']:7s} {r['n'] // MB}MB pipeline={r['pipeline_s']:.3f}s walk={r['walk_s']:.3f}s{ratio}"
            f" peak={r['peak']} capacity={r['capacity']} merges={r['merges']} appended={r['appended']}"
        )
    return "\n".join(out)


def test_3_linearity(capsys):
    ok, rows = check_linearity()
    worst = max(max(r.get("ratio", 0), r.get("walk_ratio", 0)) for r in rows)
    detail = f"1-8MB random+english, worst per-doubling ratio {worst:.2f} (limit 2.5), node/merge bounds <= n\n" + _fmt_rows(rows)
    assert report(3, ok, detail, capsys)


def check_structure(count=500, seed=77):
    violations = {"prefix-existence": 0, "chunk-order": 0, "neighbour-bound": 0}
    for text in _texts(count, 500, seed, (1, 2, 4, 26)):
        n = len(text)
        ctx = build_context(text)
        found = [lsus_at(ctx, i) for i in range(1, n + 1)]
        present = [iv is not None for iv in found]
        cut = present.index(False) if False in present else n
        if not present[0] or any(present[cut:]):
            violations["prefix-existence"] += 1
        for prev, cur in zip(found, found[1:]):
            if prev is not None and cur is not None and cur.length < prev.length - 1:
                violations["neighbour-bound"] += 1
        w = new_walker(ctx)
        for k in range(1, n + 1):
            w.find_sls(k)
            lengths = [c.cand_length for c in w.peek_chunks()]
            if any(a > b for a, b in zip(lengths, lengths[1:])):
                violations["chunk-order"] += 1
    return violations


def test_4_structural_properties(capsys):
    v = check_structure()
    detail = "500 texts, n<=500: " + ", ".join(f"{k} violations={c}" for k, c in v.items())
    assert report(4, not any(v.values()), detail, capsys)


def test_5_comparative_numbers_out_of_scope(capsys):
    report(5, True, "not reproducible here (needs third-party tools); criterion 3 substitutes", capsys, "SKIP")
    pytest.skip("comparison against third-party implementations is out of scope")


def check_cli_determinism(tmp_dir):
    import io
    import os

    from susfind import cli

    path = os.path.join(tmp_dir, "ten_kb.txt")
    with open(path, "wb") as fh:
        fh.write(english_like_text(10 * 1024, seed=13))

    def run(extra):
        buf = io.BytesIO()
        code = cli.main(["every", path, "--all"] + extra, stdout=buf)
        return code, buf.getvalue()

    first, second, slow = run([]), run([]), run(["--oracle"])
    return first[0] == second[0] == slow[0] == 0 and first[1] == second[1] == slow[1] and first[1] != b""


def test_6_cli_determinism(capsys, tmp_path):
    ok = check_cli_determinism(str(tmp_path))
    assert report(6, ok, "every --all on 10KB: two runs and --oracle byte-identical", capsys)


if __name__ == "__main__":
    import tempfile

    results = []
    mism, secs = check_oracle_equivalence()
    results.append(report(1, not mism and secs < 120, f"{len(mism)} mismatches, {secs:.1f}s"))
    results.append(report(2, check_worked_example(), "abcbb / abcabc worked example"))
    ok, rows = check_linearity()
    results.append(report(3, ok, "scaling\n" + _fmt_rows(rows)))
    v = check_structure()
    results.append(report(4, not any(v.values()), str(v)))
    report(5, True, "out of scope, noted", status="SKIP")
    with tempfile.TemporaryDirectory() as d:
        results.append(report(6, check_cli_determinism(d), "every --all determinism"))
    sys.exit(0 if all(results) else 1)
