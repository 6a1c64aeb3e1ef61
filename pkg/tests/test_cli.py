import json
import subprocess
import sys
from fractions import Fraction

import pytest

from dedekind.cli import main
from dedekind.matrix import Matrix, format_matrix, read_matrix

from conftest import GF2, GF97, Q, mat


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(name, A_or_text):
        path = tmp_path / name
        path.write_text(A_or_text if isinstance(A_or_text, str) else format_matrix(A_or_text))
        return str(path)
    return _write


FIXTURES = [
    mat(Q, [[2, 0], [4, 1]]),
    mat(Q, [[Fraction(1, 2), 3, -1], [0, 1, 4], [7, Fraction(-2, 3), 1]]),
    mat(GF2, [[1, 1], [0, 1]]),
    mat(GF2, [[0, 1, 1], [1, 0, 1], [1, 1, 1]]),
    mat(GF97, [[3, 1, 4, 1], [5, 9, 2, 6], [5, 3, 5, 8], [9, 7, 9, 3]]),
    Matrix.identity(Q, 1),
]


@pytest.mark.parametrize("A", FIXTURES)
def test_invert_then_certify_then_verify(capsys, write, tmp_path, A):
    a = write("a.mat", A)
    b, cert = str(tmp_path / "b.mat"), str(tmp_path / "cert.json")
    assert run(capsys, "invert", a, "-o", b)[0] == 0
    B = read_matrix(b)
    assert (A @ B).is_identity()
    code, out, _ = run(capsys, "certify", "--left", a, "--right", b, "--emit", cert)
    assert (code, out) == (0, "BA=I confirmed\n")
    code, out, _ = run(capsys, "verify", "--cert", cert, "--left", a, "--right", b)
    assert (code, out) == (0, "certificate valid\n")


def test_certify_identity(capsys, write):
    i2 = write("i.mat", Matrix.identity(Q, 2))
    assert run(capsys, "certify", "--left", i2, "--right", i2)[:2] == (0, "BA=I confirmed\n")


def test_certify_not_inverse(capsys, write):
    a = write("a.mat", mat(Q, [[1, 0], [0, 0]]))
    i2 = write("i.mat", Matrix.identity(Q, 2))
    code, out, err = run(capsys, "certify", "--left", a, "--right", i2)
    assert code == 3 and out == ""
    assert "(2,2)" in err


def test_verify_rejects_other_pair(capsys, write, tmp_path):
    A = FIXTURES[1]
    a = write("a.mat", A)
    b = str(tmp_path / "b.mat")
    cert = str(tmp_path / "c.json")
    run(capsys, "invert", a, "-o", b)
    run(capsys, "certify", "--left", a, "--right", b, "--emit", cert)
    i3 = write("i.mat", Matrix.identity(Q, 3))
    code, out, _ = run(capsys, "verify", "--cert", cert, "--left", i3, "--right", i3)
    assert code == 4 and out == "certificate rejected\n"


def test_verify_malformed_and_unparseable(capsys, write, tmp_path):
    i2 = write("i.mat", Matrix.identity(Q, 2))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"field": "rational", "n": 2, "levels": [], "base": "empty"}))
    assert run(capsys, "verify", "--cert", str(bad), "--left", i2, "--right", i2)[0] == 4
    bad.write_text("{not json")
    code, _, err = run(capsys, "verify", "--cert", str(bad), "--left", i2, "--right", i2)
    assert code == 1 and "bad.json:1:2" in err


def test_invert_singular(capsys, write):
    a = write("s.mat", mat(Q, [[1, 2], [2, 4]]))
    code, out, _ = run(capsys, "invert", a)
    assert code == 2
    w = [Fraction(x) for x in json.loads(out)["witness"]]
    assert w[0] == -2 * w[1] != 0


def test_invert_to_stdout(capsys, write):
    a = write("a.mat", mat(GF2, [[1, 1], [0, 1]]))
    code, out, _ = run(capsys, "invert", a)
    assert code == 0 and out == "field gf 2\nrows 2 cols 2\n1 1\n0 1\n"


def test_solve_and_rank(capsys, write):
    a = write("k.mat", mat(GF2, [[1, 1], [0, 0]]))
    assert run(capsys, "solve", a)[:2] == (0, "1 1\n")
    assert run(capsys, "rank", a)[:2] == (0, "1\n")
    i3 = write("i.mat", Matrix.identity(Q, 3))
    assert run(capsys, "solve", i3)[:2] == (0, "")
    assert run(capsys, "rank", i3)[:2] == (0, "3\n")


def test_field_override(capsys, write):
    a = write("a.mat", mat(Q, [[1, 1], [1, 1]]))
    assert run(capsys, "rank", a, "--field", "gf2")[1] == "1\n"
    b = write("b.mat", mat(Q, [[1, 1], [1, 3]]))
    assert run(capsys, "rank", b)[1] == "2\n"
    assert run(capsys, "rank", b, "--field", "gf2")[1] == "1\n"


def test_parse_error_names_location(capsys, write):
    a = write("bad.mat", "field rational\nrows 2 cols 2\n1 2\n3 x\n")
    code, out, err = run(capsys, "rank", a)
    assert code == 1 and out == ""
    assert "bad.mat:4:3" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "rank", str(tmp_path / "nope.mat"))[0] == 1


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["exhaust", "--field", "gf2"],
    ["exhaust", "--field", "gf4", "--n", "2"],
    ["exhaust", "--field", "rational", "--n", "2"],
    ["exhaust", "--field", "gf2", "--n", "2", "--jobs", "0"],
    ["exhaust", "--field", "gf2", "--n", "9"],
    ["random-check", "--field", "gf97", "--n", "2", "--trials", "0", "--seed", "1"],
    ["certify", "--left", "x.mat"],
])
def test_usage_errors_exit_1(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_exhaust_gf2_2(capsys):
    code, out, _ = run(capsys, "exhaust", "--field", "gf2", "--n", "2")
    assert code == 0
    assert json.loads(out)["invertible_count"] == 6
    assert "seed" not in json.loads(out)


def test_exhaust_jobs_identical(capsys):
    outs = {run(capsys, "exhaust", "--field", "gf3", "--n", "2", "--jobs", str(k))[1]
            for k in (1, 2, 4)}
    assert len(outs) == 1


def test_random_check_deterministic(capsys):
    argv = ["random-check", "--field", "rational", "--n", "3", "--trials", "10", "--seed", "7"]
    first, second = run(capsys, *argv), run(capsys, *argv)
    assert first == second and first[0] == 0
    assert json.loads(first[1])["seed"] == 7


def test_shift_demo(capsys):
    code, out, _ = run(capsys, "shift-demo", "--field", "rational", "--max-index", "5")
    assert code == 0
    assert out == ('{"field": "rational", "max_index": 5, "ba_identity": true, '
                   '"ab_identity": false, "witness": "e_1"}\n')


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dedekind", "shift-demo", "--field", "gf2",
                           "--max-index", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ba_identity"] is True
