"""Command-line interface: output formats, exit codes, determinism."""

import json

import pytest

from charq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_char_jt_zero_parameters(capsys):
    code, out, _ = run(capsys, "char", "--kind", "gl", "--n", "2",
                       "--lambda", "1", "--method", "jt", "--a", "zero",
                       "--out", "text")
    assert code == 0
    assert out.strip() == "1 * x1 + 1 * x2"


def test_char_hdet_shifted_square(capsys):
    code, out, _ = run(capsys, "char", "--kind", "gl", "--n", "1",
                       "--lambda", "2", "--method", "hdet", "--out", "text")
    assert code == 0
    assert out.strip() == "1 * x1^2 + 1 * x1 * a1 + 1 * x1 * a2 + 1 * a1 * a2"


def test_char_tab_so(capsys):
    code, out, _ = run(capsys, "char", "--kind", "so", "--n", "1",
                       "--lambda", "1", "--method", "tab", "--out", "text")
    assert code == 0
    assert out.strip() == "1 * x1 + 1 * a1 + 1 + 1 * x1^-1"


def test_char_multi_method_flag(capsys):
    code, out, _ = run(capsys, "char", "--kind", "sp", "--n", "2",
                       "--lambda", "2,1", "--method", "def,hdet,jt,tab")
    assert code == 0
    obj = json.loads(out)
    assert obj["equal"] is True
    assert set(obj["methods"]) == {"def", "hdet", "jt", "tab"}


def test_char_json_single_method_is_poly(capsys):
    code, out, _ = run(capsys, "char", "--kind", "gl", "--n", "2",
                       "--lambda", "1")
    obj = json.loads(out)
    assert set(obj) == {"vars", "terms"}


def test_char_json_golden_bytes(capsys):
    # frozen interchange bytes: canonical term order, lowest-term
    # coefficients, zero exponents omitted
    code, out, _ = run(capsys, "char", "--kind", "gl", "--n", "1",
                       "--lambda", "1")
    assert code == 0
    assert out == ('{"vars":["x1","y1","a1","a2","a3","t"],'
                   '"terms":[{"c":"1/1","e":{"x1":1}},'
                   '{"c":"1/1","e":{"a1":1}}]}\n')


def test_a_zero_output_has_no_a_tokens(capsys):
    for outmode in ("json", "text"):
        code, out, _ = run(capsys, "char", "--kind", "sp", "--n", "2",
                           "--lambda", "2,1", "--a", "zero", "--out", outmode)
        assert code == 0
        assert '"a' not in out and " a" not in out


def test_byte_identical_across_runs(capsys):
    args = ("qfun", "--kind", "soQ", "--n", "2", "--lambda", "2,1",
            "--method", "tab")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_qfun_routes_agree(capsys):
    code, out, _ = run(capsys, "qfun", "--kind", "glQ", "--n", "2",
                       "--lambda", "2,1", "--method", "tab,det")
    assert code == 0
    assert json.loads(out)["equal"] is True


def test_tableaux_count(capsys):
    code, out, _ = run(capsys, "tableaux", "--kind", "glChar",
                       "--lambda", "1", "--n", "2", "--count")
    assert (code, out.strip()) == (0, "2")
    code, out, _ = run(capsys, "tableaux", "--kind", "spChar",
                       "--lambda", "1,1", "--n", "2", "--count")
    assert (code, out.strip()) == (0, "5")


def test_tableaux_stream_and_text(capsys):
    code, out, _ = run(capsys, "tableaux", "--kind", "soChar",
                       "--lambda", "1", "--n", "1", "--out", "text")
    assert code == 0
    assert out.splitlines() == ["1", "1bar", "0"]
    code, out, _ = run(capsys, "tableaux", "--kind", "soChar",
                       "--lambda", "1", "--n", "1")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["cells"] for r in rows] == [[["1"]], [["1bar"]], [["0"]]]


def test_tableaux_paths_flag(capsys):
    code, out, _ = run(capsys, "tableaux", "--kind", "glQ",
                       "--lambda", "1", "--n", "1", "--paths")
    assert code == 0
    first = json.loads(out.splitlines()[0])
    assert set(first) == {"tableau", "paths"}
    assert first["paths"]["paths"][0]["edges"][0]["type"] == "C"


def test_verify_suite_ok(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tokuyama",
                       "--n-max", "2", "--mu-max", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["failed"] == 0 and rep["passed"] > 0


def test_verify_lgv_targeted(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lgv", "--kind", "glChar",
                       "--lambda", "2,1", "--n", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["cases"][0]["inputs"]["lambda"] == [2, 1]
    assert rep["failed"] == 0


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--n-max", "1",
                       "--lambda-max", "2", "--mu-max", "1", "--m-max", "2")
    assert code == 0
    names = [json.loads(line)["suite"] for line in out.splitlines()]
    assert names == ["routes", "jt-vs-def", "q-routes", "tokuyama",
                     "h-diff", "f-diff", "lgv"]


def test_verify_jobs_flag_keeps_order(capsys):
    base = ("verify", "--suite", "routes", "--n-max", "2", "--lambda-max", "2")
    _, seq, _ = run(capsys, *base)
    _, par, _ = run(capsys, *base, "--jobs", "4")
    strip = lambda text: [{k: v for k, v in c.items() if k != "ms"}
                          for c in json.loads(text)["cases"]]
    assert strip(seq) == strip(par)


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "char", "--kind", "nope", "--n", "1",
               "--lambda", "1")[0] == 2
    assert run(capsys, "char", "--kind", "gl", "--n", "1",
               "--lambda", "1", "--method", "zzz")[0] == 2
    assert run(capsys, "char", "--kind", "gl", "--n", "1",
               "--lambda", "x")[0] == 2
    assert run(capsys, "tableaux", "--kind", "glQ", "--lambda", "2,2",
               "--n", "2")[0] == 2
    assert run(capsys, "verify", "--suite", "zzz")[0] == 2
    assert run(capsys, "qfun", "--kind", "glQ", "--n", "1",
               "--lambda", "2,2")[0] == 2


def test_argparse_usage_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["char", "--kind", "gl"])  # missing required --n
    assert exc.value.code == 2


def test_subprocess_invocation_end_to_end():
    import subprocess
    import sys
    cmd = [sys.executable, "-m", "charq.cli", "char", "--kind", "so",
           "--n", "1", "--lambda", "1", "--method", "def,tab", "--out", "text"]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.splitlines()[-1] == "equal: true"
