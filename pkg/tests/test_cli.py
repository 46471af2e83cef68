import io
import json
import subprocess
import sys

import pytest

from closed_substrings.cli import format_mrc_tsv, main, parse_mrc_tsv
from closed_substrings.mrc_salcp import compute_mrc_salcp

from conftest import MISSISSIPPI, MISSISSIPPI_MRC, MISSISSIPPI_TRIPLES


def run(argv, stdin: bytes = b""):
    out = io.StringIO()
    old_stdin = sys.stdin
    sys.stdin = io.TextIOWrapper(io.BytesIO(stdin))
    try:
        code = main(argv, out=out)
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue()


@pytest.fixture
def miss_file(tmp_path):
    p = tmp_path / "w.txt"
    p.write_bytes(MISSISSIPPI + b"\n")
    return str(p)


def test_mrc_tsv(miss_file):
    code, out = run(["mrc", miss_file])
    assert code == 0
    rows = out.splitlines()
    assert rows[:3] == ["1\t1\t0", "2\t7\t4", "2\t1\t0"]
    assert rows == [f"{i}\t{r}\t{b}" for i in range(1, 12) for r, b in MISSISSIPPI_MRC[i]]


def test_mrc_engines_identical(miss_file):
    assert run(["mrc", miss_file, "--algo", "partition"]) == run(["mrc", miss_file, "--algo", "salcp"])
    a = run(["mrc", miss_file, "--format", "json", "--algo", "partition"])[1]
    assert json.loads(a)[1] == {"i": 2, "r": 7, "b": 4}


def test_mrc_stdin_and_empty():
    assert run(["mrc"], stdin=b"") == (0, "")
    assert run(["mrc"], stdin=b"aaaa\n")[1] == "1\t4\t3\n2\t3\t2\n3\t2\t1\n4\t1\t0\n"


def test_chomp(tmp_path):
    p = tmp_path / "nl.txt"
    p.write_bytes(b"ab\n")
    chomped = run(["mrc", str(p)])[1].splitlines()
    kept = run(["mrc", str(p), "--no-chomp"])[1].splitlines()
    assert len({r.split()[0] for r in chomped}) == 2
    assert len({r.split()[0] for r in kept}) == 3
    assert run(["mrc", str(p), "--chomp"])[1].splitlines() == chomped


def test_tsv_round_trip():
    for w in (MISSISSIPPI, b"abaababaab", b"a", b""):
        mrc = compute_mrc_salcp(w)
        assert parse_mrc_tsv(format_mrc_tsv(mrc), len(w)) == mrc


def test_closed(miss_file):
    code, out = run(["closed", miss_file])
    assert code == 0
    assert [tuple(map(int, r.split("\t"))) for r in out.splitlines()] == [t for t, _ in MISSISSIPPI_TRIPLES]
    assert len(run(["closed", miss_file, "--format", "expand"])[1].splitlines()) == 24
    assert run(["closed", "-s", "a"])[1] == "1\t1\t1\n"
    limited = run(["closed", miss_file, "--format", "expand", "--limit", "5"])[1].splitlines()
    assert len(limited) == 6 and limited[-1].startswith("#")
    assert run(["closed", miss_file, "--format", "expand", "--limit", "24"])[1].count("#") == 0


def test_mcs(miss_file, capsys):
    code, out = run(["mcs", "-s", "abaccaba"])
    assert code == 0 and len(out.splitlines()) == 11
    assert "census sm=6" in capsys.readouterr().err
    assert len(run(["mcs", miss_file])[1].splitlines()) == 11
    assert run(["mcs", "-s", "aaaa"])[1] == "1\t4\t3\trun\n"
    data = json.loads(run(["mcs", "-s", "aaaa", "--format", "json"])[1])
    assert data == [{"start": 1, "len": 4, "border": 3, "kind": "run"}]


def test_fib(capsys):
    code, out = run(["fib", "--n", "5", "--check"])
    assert code == 0
    assert "formula   sm=6 runs=3 gm=1 m=10" in out
    assert "algorithm sm=6 runs=3 gm=1 m=10" in out
    assert out.rstrip().endswith("MATCH") and "MISMATCH" not in out
    code, out = run(["fib", "--n", "6", "--check", "--algo", "partition"])
    assert code == 0 and "gm\t2\t2\tMATCH" in out
    code, _ = run(["fib", "--n", "4", "--check"])
    assert code == 1
    assert "n must be ≥ 5" in capsys.readouterr().err


def test_fib_mismatch_exit_code(monkeypatch):
    import closed_substrings.cli as cli
    from closed_substrings.words import FibCensus

    monkeypatch.setattr(cli, "fib_census_formula", lambda n: FibCensus(n, 8, 6, 3, 2, 11))
    code, out = run(["fib", "--n", "5", "--check"])
    assert code == 2 and "gm\t2\t1\tMISMATCH" in out


def test_exhaust():
    assert run(["exhaust", "--n", "2", "--sigma", "2"]) == (0, "2,2,2,ab\n")
    assert run(["exhaust", "--n", "1", "--sigma", "2"]) == (0, "1,2,1,a\n")
    code, out = run(["exhaust", "--n", "1", "2", "--sigma", "2", "--header"])
    assert out.splitlines() == ["n,sigma,max_mcs,witness", "1,2,1,a", "2,2,2,ab"]
    assert run(["exhaust", "--n", "40", "--sigma", "2"])[0] == 1


def test_bench():
    code, out = run(["bench", "--spec", "fibonacci:20", "--repeats", "1"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "class,n,sigma,engine,run_index,wall_ms,median_ms,outputs_equal"
    assert len(lines) == 3 and all(l.endswith(",true") for l in lines[1:])
    assert run(["bench", "--spec", "file:/does/not/exist"])[0] == 1
    assert run(["bench", "--spec", "bogus:1"])[0] == 1


def test_bench_mismatch_exit_code(monkeypatch):
    import closed_substrings.bench as bench
    from closed_substrings.core import MrcArray

    monkeypatch.setitem(bench.ENGINES, "partition", lambda w: MrcArray([[(1, 0)]] * len(w)))
    code, out = run(["bench", "--spec", "fibonacci:6", "--repeats", "1"])
    assert code == 2 and ",false" in out


def test_errors(capsys):
    assert run(["mrc", "/no/such/file"])[0] == 1
    assert "cannot read" in capsys.readouterr().err
    assert run(["mrc", "x", "-s", "y"])[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["mrc", "--bogus"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1
    assert run(["closed", "-s", "ab", "--limit", "-1", "--format", "expand"])[0] == 1


def test_console_script_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "closed_substrings.cli", "mcs", "-s", "aaaa"],
        capture_output=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == b"1\t4\t3\trun\n"
