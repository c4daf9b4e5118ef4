import json

import pytest

from persistd import MatchingCertificate, PModule, parse_module, verify_certificate
from persistd.cli import cli_main


@pytest.fixture
def module_file(tmp_path):
    def write(name, *texts):
        path = tmp_path / name
        path.write_text(PModule.of(*texts).to_json())
        return str(path)

    return write


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDist:
    def test_sharp_pair_prints_zero(self, capsys, module_file):
        a = module_file("a.json", "[0,2]")
        b = module_file("b.json", "(0,2)")
        code, out, _ = run(capsys, "dist", a, b)
        assert code == 0 and out.strip() == "0"

    def test_infinite(self, capsys, module_file):
        a = module_file("a.json", "[0,1)")
        b = module_file("b.json", "[0,inf)")
        code, out, _ = run(capsys, "dist", a, b)
        assert code == 0 and out.strip() == "inf"

    def test_exact_fraction_output(self, capsys, module_file):
        a = module_file("a.json", "[0,1)")
        b = module_file("b.json")
        code, out, _ = run(capsys, "dist", a, b)
        assert code == 0 and out.strip() == "1/2"

    def test_approx_marked(self, capsys, module_file):
        a = module_file("a.json", "[0,1)")
        b = module_file("b.json")
        code, out, _ = run(capsys, "dist", "--approx", a, b)
        assert code == 0 and out.strip() == "1/2 ~= 0.5"

    def test_missing_file_usage_error(self, capsys, module_file):
        a = module_file("a.json", "[0,1)")
        code, _, err = run(capsys, "dist", a, "nope.json")
        assert code == 2 and "cannot read" in err

    def test_malformed_module_usage_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"summands": [{"interval": "[2,1)"}]}')
        ok = tmp_path / "ok.json"
        ok.write_text(PModule.of("[0,1)").to_json())
        code, _, err = run(capsys, "dist", str(bad), str(ok))
        assert code == 2 and "[2,1)" in err


class TestInterleaved:
    def test_decision_both_ways(self, capsys, module_file):
        a = module_file("a.json", "[0,2]")
        b = module_file("b.json", "(0,2)")
        code, out, _ = run(capsys, "interleaved", "--eps", "0", a, b)
        assert code == 0 and out.strip() == "false"
        code, out, _ = run(capsys, "interleaved", "--eps", "1/1000", a, b)
        assert code == 0 and out.strip() == "true"

    def test_bad_eps(self, capsys, module_file):
        a = module_file("a.json", "[0,1)")
        code, _, err = run(capsys, "interleaved", "--eps", "fast", a, a)
        assert code == 2 and "rational" in err


class TestModuleTransforms:
    def test_classify(self, capsys, module_file):
        m = module_file("m.json", "[1,4]")
        code, out, _ = run(capsys, "classify", "--bounds", "1,4", m)
        assert code == 0
        got = json.loads(out)
        assert got["in_ffid_cd"] is True and got["is_zero"] is False

    def test_classify_without_bounds(self, capsys, module_file):
        m = module_file("m.json", "[0,inf)")
        code, out, _ = run(capsys, "classify", m)
        got = json.loads(out)
        assert code == 0 and got["in_ffid"] is False and got["in_ffid_cd"] is None

    def test_radical(self, capsys, module_file):
        m = module_file("m.json", "[0,3)", "[1,1]")
        code, out, _ = run(capsys, "radical", m)
        assert code == 0
        assert parse_module(out) == PModule.of("(0,3)")

    def test_persist(self, capsys, module_file):
        m = module_file("m.json", "[0,2]")
        code, out, _ = run(capsys, "persist", "--p", "2", m)
        assert code == 0
        assert parse_module(out) == PModule.of("[2,2]")

    def test_contract(self, capsys, module_file):
        m = module_file("m.json", "[0,2)")
        code, out, _ = run(capsys, "contract", "--t", "1/2", m)
        assert code == 0
        assert parse_module(out) == PModule.of("[1/2,3/2)")

    def test_contract_out_of_range(self, capsys, module_file):
        m = module_file("m.json", "[0,2)")
        code, _, err = run(capsys, "contract", "--t", "3/2", m)
        assert code == 2 and "[0, 1]" in err


class TestGen:
    def test_cube(self, capsys):
        code, out, _ = run(capsys, "gen", "cube", "--x", "0,0")
        assert code == 0
        assert parse_module(out) == PModule.of("[1/2,11/20)", "[1,21/20)")

    def test_cube_bad_coordinate(self, capsys):
        code, _, err = run(capsys, "gen", "cube", "--x", "1,0")
        assert code == 2 and "out of range" in err

    def test_binary(self, capsys):
        code, out, _ = run(capsys, "gen", "binary", "--bits", "01")
        assert code == 0
        assert parse_module(out) == PModule.of("[1,3)", "[2,6)")

    def test_cauchy(self, capsys):
        code, out, _ = run(capsys, "gen", "cauchy", "--n", "1")
        assert code == 0
        assert parse_module(out) == PModule.of("[-1,1)", "[-1/2,1/2)")

    def test_staircase(self, capsys):
        code, out, _ = run(capsys, "gen", "staircase", "--n", "3")
        assert code == 0
        assert parse_module(out) == PModule.of("[0,1)", "[0,2)", "[0,3)")

    def test_replicate(self, capsys):
        code, out, _ = run(capsys, "gen", "replicate", "--interval", "[0,1)", "--count", "2")
        assert code == 0
        assert parse_module(out) == PModule.of("[0,1)", "[0,1)")

    def test_witness(self, capsys, module_file):
        m = module_file("m.json", "[10,40)")
        code, out, _ = run(
            capsys,
            "gen", "witness", "--module", m, "--inclusion", "ffid_cd_in_ffid",
            "--eps", "1/8", "--bounds", "10,100",
        )
        assert code == 0
        assert parse_module(out) == PModule.of("[10,40)", "[100,401/4)")

    def test_witness_missing_bounds(self, capsys, module_file):
        m = module_file("m.json", "[10,40)")
        code, _, err = run(
            capsys, "gen", "witness", "--module", m,
            "--inclusion", "ffid_cd_in_ffid", "--eps", "1/8",
        )
        assert code == 2 and "bounds" in err


class TestCert:
    def test_round_trip(self, capsys, module_file):
        a = module_file("a.json", "[0,1)", "[5,9)")
        b = module_file("b.json", "[0,1)")
        code, out, _ = run(capsys, "cert", a, b)
        assert code == 0
        cert = MatchingCertificate.from_json_obj(json.loads(out))
        m = parse_module(open(a).read())
        n = parse_module(open(b).read())
        assert verify_certificate(m, n, cert)
        assert cert.threshold.as_fraction == 2

    def test_infinite_distance_is_failure_exit(self, capsys, module_file):
        a = module_file("a.json", "[0,1)")
        b = module_file("b.json", "[0,inf)")
        code, _, err = run(capsys, "cert", a, b)
        assert code == 1 and "infinitely far" in err


class TestVerify:
    def test_suite_passes(self, capsys):
        code, out, _ = run(
            capsys, "verify", "cube-isometry", "--seed", "1", "--trials", "10", "--N", "4"
        )
        assert code == 0
        assert "PASS" in out and "all properties pass" in out

    def test_json_report(self, capsys):
        code, out, _ = run(
            capsys, "verify", "pseudometric", "--seed", "1", "--trials", "5", "--json"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["all_pass"] is True and obj["suite"] == "pseudometric"

    def test_unknown_suite_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "flat-earth")
        assert code == 2

    def test_bad_param_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "cube-isometry", "--N", "many")
        assert code == 2 and "bad value" in err


class TestCap:
    def test_env_cap_respected(self, capsys, module_file, monkeypatch):
        monkeypatch.setenv("PERSISTD_MATCH_CAP", "1")
        a = module_file("a.json", "[0,1)")
        code, _, err = run(capsys, "dist", a, a)
        assert code == 2 and "vertex cap" in err


def test_help_exits_zero(capsys):
    assert cli_main(["--help"]) == 0
    capsys.readouterr()


def test_no_command_is_usage_error(capsys):
    assert cli_main([]) == 2
    capsys.readouterr()
