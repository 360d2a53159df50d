import json
import subprocess
import sys
from pathlib import Path

import pytest

from qshuffle import Braiding, LaurentPolynomial, QPolynomial, TensorExpr, Word
from qshuffle.cli import main, run
from qshuffle.config import load_braiding, parse_coefficient
from qshuffle.errors import BraidingError
from qshuffle.serialize import expansion_from_json, tensor_from_json

ROOT = Path(__file__).resolve().parents[1]
BRAIDINGS = ROOT / "braidings"
q = LaurentPolynomial.q()


@pytest.fixture(autouse=True)
def _isolate(monkeypatch, tmp_path):
    monkeypatch.delenv("QSHUFFLE_BRAIDING", raising=False)
    monkeypatch.chdir(tmp_path)


def ok(*argv):
    code, out, err = run(list(argv))
    assert code == 0, err
    return out


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["factorize", "18,19,4,8,5,7"], "(18) (19,4,8,5,7)"),
        (["factorize", "7"], "(7)"),
        (["factorize", "2,1,2,1"], "(2,1)^2"),
        (["shuffle", "1", "2", "--braiding", "symbolic"], "e(1,2) + q[1,2] e(2,1)"),
        (["shuffle", "1", "2", "--braiding", "classical"], "e(1,2) + e(2,1)"),
        (["alpha", "18,19,4,8,5,7", "--braiding", "symbolic"], "1"),
        (["serre", "1", "2", "--braiding", "cartan:a2.toml"], "0"),
        (["rootcheck", "1:2", "4", "--braiding", "cartan:a2.toml"], "(1,1): DEGENERATE"),
        (["rootcheck", "1:2", "3", "--braiding", "cartan:a2.toml"], "(1,1): ok"),
        (["express", "1,2", "--braiding", "cartan:A2"], "v(1,2) = X(1,2) - q^-1 X(2,1)"),
        (["alpha", "1,1", "--braiding", "cartan:A2"], "1 + q^2"),
        (["primes", "2", "3"], "1: (2) (1)\n2: (2,1)\n3: (2,2,1) (2,1,1)"),
    ],
)
def test_documented_outputs(argv, expected):
    assert ok(*argv) == expected


def test_shuffle_three_terms():
    out = ok("shuffle", "1,1", "2", "--braiding", "symbolic")
    assert out == "e(1,1,2) + q[1,2] e(1,2,1) + q[1,2]^2 e(2,1,1)"


def test_config_files_from_repo():
    for name in ["a2.toml", "b2.toml", "a1xa1.toml"]:
        assert ok("serre", "1", "2", "--braiding", f"cartan:{BRAIDINGS / name}") == "0"
    assert ok("express", "1,1", "--braiding", str(BRAIDINGS / "a2_q2.toml")) == "v(1,1) = 1/5 X(1,1)"
    out = ok("shuffle", "1", "2", "--braiding", str(BRAIDINGS / "table_example.toml"))
    assert out == "e(1,2) + q^-1 e(2,1)"


def test_env_var_default(monkeypatch):
    monkeypatch.setenv("QSHUFFLE_BRAIDING", str(BRAIDINGS / "a2.toml"))
    assert ok("alpha", "1,1") == "1 + q^2"


def test_json_round_trip():
    out = ok("xa", "1,1,2", "--format", "json")
    expr = tensor_from_json(json.loads(out))
    q12, q11 = QPolynomial.gen(1, 2), QPolynomial.gen(1, 1)
    assert expr.terms == {
        Word([1, 1, 2]): 1 + q11,
        Word([1, 2, 1]): q12 + q11 * q12,
        Word([2, 1, 1]): q12 * q12 + q11 * q12 * q12,
    }
    e = expansion_from_json(json.loads(ok("express", "1,2", "--braiding", "cartan:A2", "--format", "json")))
    assert e.combination == {Word([1, 2]): 1, Word([2, 1]): -(q ** -1)}


def test_latex_output():
    assert ok("shuffle", "1", "2", "--format", "latex") == r"v_{1} \otimes v_{2} + q_{1,2} v_{2} \otimes v_{1}"
    assert ok("factorize", "2,1,2,1", "--format", "latex") == "(2,1)^{2}"


def test_matrix_command():
    out = ok("matrix", "1:1,2:1", "--braiding", "cartan:B2")
    assert out.splitlines() == ["(2,1)\t(1,2)", "1\t0", "q^-2\t1"]
    data = json.loads(ok("matrix", "1:1,2:1", "--format", "json"))
    assert data["words"] == [[2, 1], [1, 2]]


def test_parallelism_does_not_change_output():
    args = ["xa", "3,1,2,1,3,2,1", "--braiding", "symbolic"]
    assert ok(*args, "--parallelism", "1") == ok(*args, "--parallelism", "2") == ok(*args)


@pytest.mark.parametrize(
    "argv, code, fragment",
    [
        (["factorize", "1,x"], 2, ""),
        (["rootcheck", "1:0", "4"], 2, ""),
        (["alpha", "1", "--braiding", "nonsense"], 3, "unknown braiding"),
        (["serre", "1", "2", "--braiding", "cartan:E9.toml"], 3, "E9"),
        (["express", "1,2", "--braiding", "symbolic"], 3, "field"),
        (["serre", "1", "2"], 3, "Cartan"),
        (["shuffle", "1,2,3,4", "1,2,3,4", "--max-terms", "10"], 6, "limit"),
        (["rootcheck", "1:2", "1", "--braiding", "cartan:A2"], 2, "at least 2"),
        (["serre", "1", "1", "--braiding", "cartan:A2"], 2, "distinct"),
    ],
)
def test_exit_codes(argv, code, fragment):
    got, out, err = run(argv)
    assert got == code
    assert out == ""
    assert fragment in err


def test_degenerate_exit(tmp_path):
    cfg = tmp_path / "bad.toml"
    cfg.write_text('kind = "table"\ntable = [[1, 1, -1], [1, 2, 1], [2, 1, 1], [2, 2, 1]]\n')
    code, _, err = run(["express", "1,1", "--braiding", str(cfg)])
    assert code == 4
    assert "(1,1)" in err


def test_undefined_table_pair_exit(tmp_path):
    cfg = tmp_path / "partial.json"
    cfg.write_text(json.dumps({"kind": "table", "table": [[1, 1, 2], [1, 2, "3/2"]]}))
    assert ok("shuffle", "1", "2", "--braiding", str(cfg)) == "e(1,2) + 3/2 e(2,1)"
    code, _, err = run(["shuffle", "2", "1", "--braiding", str(cfg)])
    assert code == 3 and "(2,1)" in err


def test_main_prints(capsys):
    assert main(["factorize", "2,1,2,1"]) == 0
    assert capsys.readouterr().out == "(2,1)^2\n"
    assert main(["alpha", "1", "--braiding", "nope"]) == 3
    assert "braiding error" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qshuffle", "factorize", "18,19,4,8,5,7"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "(18) (19,4,8,5,7)\n"


def test_parse_coefficient():
    assert parse_coefficient(3) == 3
    assert parse_coefficient("-2/4") == pytest.approx(-0.5)
    assert parse_coefficient("q^-1") == q ** -1
    assert parse_coefficient("1 + q^2") == 1 + q**2
    assert parse_coefficient("-3q^2 + 2*q - 1") == -3 * q**2 + 2 * q - 1
    for bad in ["q^", "2x", "", 1.5, True]:
        with pytest.raises(BraidingError):
            parse_coefficient(bad)


def test_load_braiding_variants(tmp_path):
    assert isinstance(load_braiding("symbolic"), type(Braiding.symbolic()))
    assert load_braiding("classical").pair(1, 2) == 1
    assert load_braiding("cartan:G2").pair(1, 2) == q ** -3
    cfg = tmp_path / "c.toml"
    cfg.write_text('cartan = [[2, -1], [-1, 2]]\nletters = [5, 7]\n')
    b = load_braiding(str(cfg))
    assert b.pair(5, 7) == q ** -1 and b.pair(7, 7) == q**2
    cfg.write_text('kind = "numeric"\ncartan = "A2"\nq = "3/2"\n')
    assert load_braiding(str(cfg)).pair(1, 1) == pytest.approx(2.25)
    cfg.write_text("not = [valid")
    with pytest.raises(BraidingError):
        load_braiding(str(cfg))
    cfg.write_text('kind = "numeric"\ncartan = "A2"\nq = 1.5\n')
    with pytest.raises(BraidingError):
        load_braiding(str(cfg))


def test_invariant_violation_exit(monkeypatch):
    import qshuffle.bases as bases

    def broken(a, braiding, **kwargs):
        return TensorExpr.basis(Word([9]))

    monkeypatch.setattr(bases, "x_of", broken)
    code, _, err = run(["matrix", "1:1,2:1"])
    assert code == 5
    assert "invariant" in err


def test_parallelism_cap():
    assert run(["factorize", "1", "--parallelism", "65"])[0] == 2
    assert run(["factorize", "1", "--parallelism", "-1"])[0] == 2
    assert ok("factorize", "1", "--parallelism", "0") == "(1)"
