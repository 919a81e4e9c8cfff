import json
import subprocess
import sys

import pytest

from digitwords.cli import run, run_capture


def test_digits_sqrt2_binary():
    code, out = run_capture(["digits", "--source", "sqrt:2", "--base", "2", "--count", "50"])
    assert code == 0
    assert out.strip() == "1.01101010000010011110011001100111111100111011110011"


def test_complexity_powers2():
    code, out = run_capture(["complexity", "--word", "powers2", "--max-m", "6", "--horizon", "4096"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "# horizon=4096"
    assert lines[-1] == "2,4,6,7,9,11"


def test_word_fib():
    assert run_capture(["word", "--morphism", "fib", "--prefix", "13"]) == (0, "abaababaabaab\n")


def test_automaton_and_fib():
    assert run_capture(["automaton", "eval", "--name", "ptm", "--n", "9", "--trace"])[1] == "0\ni a a a i\n"
    assert run_capture(["fib", "zeckendorf", "51"])[1] == "9 7 4 2\n"
    assert run_capture(["fib", "rabbits", "14"])[1] == "AYAAYAYAAYAAYA\n"


def test_bbp_and_series():
    assert run_capture(["bbp", "digit", "--spec", "pi16", "--position", "1", "--count", "6"])[1] == "243f6a\n"
    assert run_capture(["fpseries", "verify-ptm", "--order", "256"])[1] == "order=256 identity=holds\n"
    code, out = run_capture(["bbp", "orbit", "--spec", "log2_2", "--count", "3", "--format", "json"])
    assert json.loads(out)[2] == {"n": 2, "y": "0.50000000000000000"}


def test_cf_commands():
    assert run_capture(["cf", "expand", "--source", "sqrt:2", "--terms", "4"])[1] == "[1; 2, 2, 2, 2]\n"
    assert run_capture(["cf", "from-word", "--terms", "5"])[1] == "[0; 1, 2, 1, 1, 2]\n"
    code, out = run_capture(["cf", "roy", "--xmax", "100", "--points", "3"])
    assert code == 0 and out.startswith("X,x0,x1,x2,delta,s\n")


def test_patterns_and_normality():
    code, out = run_capture(["patterns", "--word", "text:01101001101001", "--kind", "w_power", "--power", "7/3"])
    assert "w_power,0,14,6,01101001101001" in out
    code, out = run_capture(["normality", "--source", "rational:1/3", "--base", "10", "--count", "1000"])
    assert "consistent=false" in out


def test_exit_codes(capsys):
    assert run(["digits", "--source", "mystery:1", "--count", "3"]) == 2
    assert run(["nonsense"]) == 2
    assert run(["cf", "expand"]) == 2


def test_precision_exit_code(monkeypatch):
    from digitwords import reals

    monkeypatch.setattr(reals, "DEFAULT_POLICY", reals.PrecisionPolicy(max_bits=64))
    monkeypatch.setattr(reals.RealSource, "policy", reals.PrecisionPolicy(guard_bits=8, max_bits=64, retries=3))
    assert run(["digits", "--source", "bbp:pi16", "--base", "10", "--count", "200"]) == 3


def test_deterministic_output():
    argv = ["complexity", "--word", "rudin_shapiro", "--max-m", "8", "--horizon", "5000", "--format", "json"]
    assert run_capture(argv) == run_capture(argv)


def test_fixtures_env(tmp_path, monkeypatch):
    (tmp_path / "empirical.json").write_text('{"roy_1_2": {"c_emp": 9.0}}')
    monkeypatch.setenv("FIXTURES_DIR", str(tmp_path))
    code, out = run_capture(["fixtures"])
    assert code == 0 and json.loads(out)["roy_1_2"]["c_emp"] == 9.0


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "digitwords.cli", "word", "--name", "fibonacci", "--prefix", "8"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "abaababa\n"
