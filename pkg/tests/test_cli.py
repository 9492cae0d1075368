import json
import subprocess
import sys

import pytest

from selberg_moments.cli import dumps_record, main

from conftest import GOLDEN_COEFFS


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_golden_json(capsys):
    code, out, _ = run(capsys, "compute", "--n", "5", "--tau", "5", "--alpha", "2", "--beta", "2", "--mu", "2")
    assert code == 0
    rec = json.loads(out)
    got = [(int(c["num"]), int(c["den"])) for c in rec["coeffs"]]
    assert got == [(q.numerator, q.denominator) for q in GOLDEN_COEFFS]
    assert rec["checks"] == {"endpoint0": "pass", "endpoint1": "pass", "monic": "pass"}
    assert rec["tau"] == "5/1" and rec["n"] == 5 and rec["mu"] == 2
    # canonical: re-serialising the parsed record is byte-identical
    assert dumps_record(rec) == out.strip()


def test_compute_plain(capsys):
    code, out, _ = run(capsys, "compute", "--n", "1", "--tau", "1", "--alpha", "1", "--beta", "1", "--mu", "1", "--format", "plain")
    assert code == 0
    assert out.splitlines() == ["0 -1/2", "1 1/1"]


def test_compute_singular_exit(capsys):
    code, _, err = run(capsys, "compute", "--n", "2", "--tau", "1", "--alpha", "1", "--beta", "2", "--mu", "2")
    assert code == 2
    assert "singular" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--n", "0", "--tau", "1", "--alpha", "2", "--beta", "2", "--mu", "1"],
        ["compute", "--n", "2", "--tau", "1/0", "--alpha", "2", "--beta", "2", "--mu", "1"],
        ["compute", "--n", "2", "--tau", "1", "--alpha", "-2", "--beta", "2", "--mu", "1"],
    ],
)
def test_compute_bad_values(capsys, argv):
    assert run(capsys, *argv)[0] == 1


@pytest.mark.parametrize("argv", [[], ["compute", "--n", "2"], ["nosuch"], ["verify", "--suite", "bogus"]])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 1


def test_verify_suites(capsys):
    for suite in ("matrices", "three-term", "mu1"):
        code, out, _ = run(capsys, "verify", "--suite", suite, "--max-n", "3")
        assert code == 0
        assert out.strip().splitlines()[-1].startswith(f"{suite}:")


def test_verify_reports_failure(capsys, monkeypatch):
    import selberg_moments.cli as cli
    from selberg_moments.verify import Check

    def fake(suite, max_n, seed):
        yield Check("x", "first", "print(1)", lambda: True), True
        yield Check("x", "second", "reproduce_me()", lambda: False), False

    monkeypatch.setattr(cli, "run_suite", fake)
    code, out, _ = run(capsys, "verify", "--suite", "mu1")
    assert code == 3
    assert "FAIL [x] second" in out and "reproduce_me()" in out


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--n-list", "2,4,6", "--mu", "2", "--tau", "1", "--repeat", "3")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert [int(r.split()[0]) for r in rows] == [2, 4, 6]
    assert rows[0].split()[2] == "-"


def test_bench_bad_repeat(capsys):
    assert run(capsys, "bench", "--repeat", "0")[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "selberg_moments", "compute", "--n", "1", "--tau", "1",
         "--alpha", "2", "--beta", "2", "--mu", "2", "--format", "plain"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["0 3/10", "1 -1/1", "2 1/1"]
