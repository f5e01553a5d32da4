import io
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from equidiff.cli import main

SAMPLES = Path(__file__).resolve().parent.parent / "sample_specs"
VALID = sorted(SAMPLES.glob("*.cover"))


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_validate_ok():
    assert run("validate", SAMPLES / "hyperelliptic_g2_n1.cover") == (0, "valid\n", "")


def test_validate_reports_violation_with_line():
    code, out, err = run("validate", SAMPLES / "invalid" / "swap_in_stabilizer.cover")
    assert code == 1 and out == ""
    assert err.startswith(f"{SAMPLES / 'invalid' / 'swap_in_stabilizer.cover'}:16: "
                          "swap-fixes-branches [N1]")


def test_syntax_error_exit(tmp_path):
    bad = tmp_path / "bad.cover"
    bad.write_text("[group]\ninvariants = 2\n[quotient\n")
    code, _, err = run("dims", bad)
    assert code == 2
    assert f"{bad}:3:1: error:" in err


def test_missing_file(tmp_path):
    assert run("genus", tmp_path / "nope.cover")[0] == 2


def test_usage_error():
    assert run("frobnicate")[0] == 2


def test_dims_output():
    code, out, _ = run("dims", SAMPLES / "hyperelliptic_g2_n1.cover")
    assert code == 0
    assert out == "# equidiff dims v1\n0\t0\n1\t3\n"


def test_dims_single_character():
    path = SAMPLES / "klein_two_components.cover"
    code, out, _ = run("dims", path, "--char", "0,0")
    assert (code, out) == (0, "# equidiff dims v1\n0,0\t0\n")
    code, _, err = run("dims", path, "--char", "1")
    assert code == 2 and "coordinates" in err
    assert run("dims", path, "--char", "x,y")[0] == 2


def test_genus_output():
    code, out, _ = run("genus", SAMPLES / "two_lines_m5.cover")
    assert code == 0
    assert out.splitlines() == ["# equidiff genus v1", "quotient_genus\t0",
                                "normalization_genus\t0", "nodes\t5", "arithmetic_genus\t4"]


@pytest.mark.parametrize("path", VALID, ids=lambda p: p.name)
def test_selfcheck_passes(path):
    code, out, _ = run("selfcheck", path)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# equidiff selfcheck v1"
    assert all(line.startswith("PASS ") for line in lines[1:])


@pytest.mark.parametrize("path", VALID, ids=lambda p: p.name)
def test_deterministic(path):
    assert run("dims", path) == run("dims", path)


def test_oracle_command():
    code, out, _ = run("oracle", "--e", "3", "--exponents", "1,1,1,1")
    assert code == 0
    assert out == "# equidiff oracle v1\n# e=3 genus=3 direction=forward\n0\t0\n1\t2\n2\t1\n"
    code, out, _ = run("oracle", "--e", "3", "--exponents", "1,1,1,1", "--direction", "inverse")
    assert out.splitlines()[2:] == ["0\t0", "1\t1", "2\t2"]
    assert run("oracle", "--e", "4", "--exponents", "2,2")[0] == 2


def test_max_order_flag():
    path = SAMPLES / "klein_two_components.cover"
    assert run("--max-order", "2", "validate", path)[0] == 2


@pytest.mark.skipif(shutil.which("equidiff") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["equidiff", "dims", str(SAMPLES / "two_lines_m5.cover")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "# equidiff dims v1\n0\t0\n1\t4\n"


def test_module_entry():
    proc = subprocess.run([sys.executable, "-m", "equidiff", "validate",
                           str(SAMPLES / "invalid" / "three_branch_z2.cover")],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "admissibility" in proc.stderr
