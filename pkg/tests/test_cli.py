import io
import json
import subprocess
import sys

import pytest

from weylinv.cli import main, parse_spec, spec_to_text, SpecParseError
from weylinv.rootdata import GroupSpec, SimpleFactor


def run_cli(*argv):
    """Run main() capturing stdout; returns (exit code, output)."""
    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        code = main(list(argv))
    finally:
        sys.stdout = old
    return code, buf.getvalue()


class TestParse:
    def test_products_and_diagonal(self):
        spec = parse_spec("(SL(8) x SL(8)) / mu(2)")
        assert spec.factors == (SimpleFactor("A", 7), SimpleFactor("A", 7))
        assert spec.center_kernel == ((4, 4),)

    def test_pgo8(self):
        spec = parse_spec("PGO(8)")
        assert spec.factors == (SimpleFactor("D", 4),)
        assert sorted(spec.center_kernel) == [((0, 1),), ((1, 0),)]

    def test_non_diagonal_e6(self):
        spec = parse_spec("(E6 x E6) / mu(3)[1,2]")
        assert spec.center_kernel == ((1, 2),)

    def test_aliases(self):
        assert parse_spec("PGL(5)").center_kernel == ((1,),)
        assert parse_spec("PGSp(6)").center_kernel == ((1,),)
        assert parse_spec("SO(7)").center_kernel == ((1,),)
        assert parse_spec("SO(10)").center_kernel == ((2,),)
        assert parse_spec("SO(12)").center_kernel == (((1, 0),),)
        assert parse_spec("HSpin(16)").center_kernel == (((0, 1),),)
        assert parse_spec("Sp(2)").factors == (SimpleFactor("A", 1),)
        assert parse_spec("Spin(3)").factors == (SimpleFactor("A", 1),)

    def test_mixed_parity_d_mu2(self):
        spec = parse_spec("(Spin(10) x Spin(12)) / mu(2)")
        assert spec.center_kernel == ((2, (1, 0)),)

    def test_errors(self):
        for bad in ["SL(1)", "Spin(4)", "Sp(3)", "PGO(10)", "HSpin(10)",
                    "(SL(4) x SL(4)) / mu(3)", "(Spin(8) x Spin(8)) / mu(4)",
                    "Q(8)", "SL(4) /", "(E6 x E6) / mu(3)[1]"]:
            with pytest.raises(SpecParseError):
                parse_spec(bad)

    def test_round_trip(self):
        for text in ["SL(2)", "(SL(8) x SL(8)) / mu(2)", "PGO(8)",
                     "(E6 x E6) / mu(3)[1,2]", "(E6 x E6) / mu(3)",
                     "PGSp(4) x PGSp(8)", "SO(5) x Spin(7)",
                     "(Sp(4) x Sp(4)) / mu(2)", "HSpin(16)",
                     "(Spin(10) x Spin(10)) / mu(4)"]:
            spec = parse_spec(text)
            assert parse_spec(spec_to_text(spec)) == spec, text


class TestRun:
    def test_invariants_json(self):
        code, out = run_cli("invariants", "--spec", "(Sp(4) x Sp(4))/mu(2)", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["inv_ind"]["factors"] == [2]
        assert data["inv_sd"]["factors"] == [2]

    def test_trivial_simply_connected(self):
        code, out = run_cli("invariants", "--spec", "SL(2)", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["inv_ind"]["factors"] == []
        assert data["Q"]["hnf"] == data["Dec"]["hnf"] == data["Sdec"]["hnf"]

    def test_determinism(self):
        args = ("invariants", "--spec", "(Spin(7) x Spin(7))/mu(2)", "--json")
        code1, out1 = run_cli(*args)
        code2, out2 = run_cli(*args)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_usage_error_exit_code(self):
        code, _ = run_cli("invariants", "--spec", "NOPE(3)")
        assert code == 1

    def test_verify_flatness(self):
        code, out = run_cli("verify-flatness", "--type", "C", "--rank", "4")
        assert code == 0
        assert "unit monomial" in out

    def test_fuzz(self):
        code, out = run_cli("fuzz-syzygy", "--cases", "5", "--seed", "1")
        assert code == 0
        assert "0 failures" in out

    def test_pgo8_check(self):
        code, out = run_cli("pgo8-check", "--cases", "3", "--seed", "2")
        assert code == 0

    def test_generators_and_reduce(self, tmp_path):
        code, out = run_cli("generators", "--spec", "(Sp(4) x Sp(4))/mu(2)")
        assert code == 0
        assert "h2[1]" in out
        # build the f-tuple encoding h2[1] and reduce it through the CLI
        from weylinv.generators import build_generators, combination_to_tuple
        from weylinv.laurent import LaurentPoly, to_text
        from weylinv.rootdata import compile_spec
        model = compile_spec(parse_spec("(Sp(4) x Sp(4))/mu(2)"))
        gs = build_generators(model)
        f = combination_to_tuple(gs, {"h2[1]": LaurentPoly.const(4, 1, 0)})
        path = tmp_path / "f.json"
        path.write_text(json.dumps([to_text(p) for p in f]))
        code, out = run_cli("reduce", "--spec", "(Sp(4) x Sp(4))/mu(2)",
                            "--input", str(path))
        assert code == 0
        data = json.loads(out)
        assert data["combination"] == {"h2[1]": "1"}

    def test_table_family(self):
        code, out = run_cli("table", "--family", "prop:typeE")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("spec\t")
        row = dict(zip(lines[0].split("\t"), lines[1].split("\t")))
        assert row["inv_ind"] == "Z/2 + Z/6"
        row2 = dict(zip(lines[0].split("\t"), lines[2].split("\t")))
        assert row2["inv_ind"] == "Z/3 + Z/12"

    def test_table_pgo8(self):
        code, out = run_cli("table", "--family", "pgo8")
        assert code == 0
        assert "[[4]]\t[[4]]\tZ/2\t0" in out

    def test_unknown_family(self):
        code, _ = run_cli("table", "--family", "nope")
        assert code == 1


class TestConsoleScript:
    def test_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-c",
             "from weylinv.cli import main; import sys; "
             "sys.exit(main(['invariants', '--spec', 'SL(2)', '--json']))"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["inv_ind"]["factors"] == []
