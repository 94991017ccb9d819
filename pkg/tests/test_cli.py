import io
import json
import subprocess
import sys


from pathmorph.cli import Config, load_config, main


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_count():
    assert run(["count", "--n", "4", "--set", "C"]) == (0, "5\n", "")
    assert run(["count", "--n", "6", "--set", "D", "--method", "enumerate"])[1] == "42\n"
    assert run(["count", "--n", "6", "--set", "T", "--method", "recursion"])[1] == "132\n"
    assert run(["count", "--n", "40", "--set", "A"])[1] == "107507208733336176461620\n"


def test_map_single():
    assert run(["map", "--bijection", "phi1", "--path", "(0,1,2,3,2,1,0)"]) == \
        (0, "(0,1,2,3,4,5,6)\n", "")
    code, out, _ = run(["map", "--bijection", "psi2", "--path", "(0,1,0,1,0)",
                        "--format", "jsonl"])
    assert (code, out) == (0, "[0,1,2,1,0]\n")


def test_map_errors_exit_2():
    code, out, err = run(["map", "--bijection", "phi2", "--path", "(0,1,0)"])
    assert code == 2 and out == "" and "NTooSmall" in err and err.count("\n") == 1
    code, _, err = run(["map", "--bijection", "phi1", "--path", "(0,-1,0)"])
    assert code == 2 and "NotInDomain" in err
    code, _, err = run(["map", "--bijection", "phi1", "--path", "(0,1,1,0)"])
    assert code == 2 and "BadStep" in err


def test_map_batch():
    code, out, _ = run(["map", "--bijection", "phi2"],
                       stdin="[0,1,2,3,4,3,2,1,0]\n\n[0,1,2,1,0]\n")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert rows[0] == {"input": [0, 1, 2, 3, 4, 3, 2, 1, 0],
                       "output": [0, 1, 2, 3, 2, 1, 0, 1, 0], "markers": {"tau": 7}}
    assert rows[1]["markers"] == {"tau": 3}
    code, out, _ = run(["map", "--bijection", "phi1"], stdin="[0,1,2,1,0,1,0]\n")
    assert json.loads(out)["markers"] == {"M": 2, "a": [1, 2], "b": [0, 1]}


def test_enumerate_formats():
    assert run(["enumerate", "--n", "1", "--set", "A"])[1] == "(0,-1,0)\n(0,1,0)\n"
    assert run(["enumerate", "--n", "1", "--set", "A", "--format", "jsonl"])[1] == \
        "[0,-1,0]\n[0,1,0]\n"
    direct = run(["enumerate", "--n", "5", "--set", "C", "--method", "direct"])[1]
    assert direct == run(["enumerate", "--n", "5", "--set", "C"])[1]
    code, _, err = run(["enumerate", "--n", "13", "--set", "C"])
    assert code == 2 and "LimitExceeded" in err


def test_sample_reproducible():
    a = run(["sample", "--n", "4", "--set", "C", "--seed", "7", "--count", "20"])
    b = run(["sample", "--n", "4", "--set", "C", "--seed", "7", "--count", "20"])
    assert a == b and a[0] == 0 and len(a[1].splitlines()) == 20
    code, _, err = run(["sample", "--n", "1", "--set", "D", "--seed", "1"])
    assert code == 2 and "EmptyFamily" in err


def test_verify_exit_codes_and_json():
    code, out, _ = run(["verify", "--n", "4", "--check", "bijection2", "--format", "json"])
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and [r["n"] for r in doc["reports"]] == [2, 3, 4]
    code, out, _ = run(["verify", "--n", "5", "--from", "5", "--check", "counts"])
    assert code == 0 and out.startswith("PASS counts n=5")
    code, _, err = run(["verify", "--n", "13", "--check", "theorems", "--from", "13"])
    assert code == 2


def test_verify_failure_exit_1(monkeypatch):
    from pathmorph import verify

    def failing(n, **kw):
        rep = verify.VerifyReport(n, "counts")
        rep.fail(None, "forced")
        return rep

    monkeypatch.setattr(verify, "check_counts", failing)
    code, out, _ = run(["verify", "--n", "2", "--check", "counts"])
    assert code == 1 and "FAIL" in out


def test_render(tmp_path):
    target = tmp_path / "g.svg"
    code, _, _ = run(["render", "--n", "4", "--bijection", "phi2", "--out", str(target),
                      "--columns", "2", "--cell", "200x150"])
    assert code == 0
    text = target.read_text()
    assert text.count('class="panel"') == 5 and 'width="400" height="450"' in text
    code, _, err = run(["render", "--n", "4", "--bijection", "phi2", "--out", str(target),
                        "--cell", "big"])
    assert code == 2


def test_usage_errors():
    assert run([])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run(["count", "--n", "x", "--set", "C"])[0] == 2
    assert run(["count", "--n", "3", "--set", "Q"])[0] == 2


def test_config_precedence(tmp_path, monkeypatch):
    cfg = tmp_path / "pm.cfg"
    cfg.write_text("# settings\nexhaustive_limit = 3\noutput_format=jsonl\n")
    assert load_config(str(cfg), environ={}) == Config(exhaustive_limit=3,
                                                       output_format="jsonl")
    env = {"PATHMORPH_EXHAUSTIVE_LIMIT": "5"}
    assert load_config(str(cfg), environ=env).exhaustive_limit == 5
    assert load_config(None, environ={}) == Config()
    monkeypatch.setenv("PATHMORPH_EXHAUSTIVE_LIMIT", "3")
    code, _, err = run(["enumerate", "--n", "4", "--set", "C"])
    assert code == 2 and "LimitExceeded" in err
    assert run(["enumerate", "--n", "4", "--set", "C", "--limit-override"])[0] == 0
    code, out, _ = run(["--config", str(cfg), "enumerate", "--n", "1", "--set", "A"])
    assert out == "[0,-1,0]\n[0,1,0]\n"
    # flag beats config
    code, out, _ = run(["--config", str(cfg), "enumerate", "--n", "1", "--set", "A",
                        "--format", "tuple"])
    assert out == "(0,-1,0)\n(0,1,0)\n"
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour=blue\n")
    assert run(["--config", str(bad), "count", "--n", "2", "--set", "C"])[0] == 2


def test_output_byte_identical():
    argv = ["enumerate", "--n", "5", "--set", "D"]
    assert run(argv) == run(argv)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pathmorph", "count", "--n", "4",
                           "--set", "C"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "5\n"
