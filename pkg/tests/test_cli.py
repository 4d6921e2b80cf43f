import importlib.resources
import json

import jsonschema
import pytest

from rhokit.cli import run_cli


def schema(name):
    path = importlib.resources.files("rhokit") / "schemas" / f"{name}.schema.json"
    return json.loads(path.read_text())


def invoke(capsys, *args):
    code = run_cli(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRho:
    def test_exact_json(self, capsys):
        code, out, err = invoke(capsys, "rho", "P1", "P2")
        assert code == 0 and err == ""
        payload = json.loads(out)
        jsonschema.validate(payload, schema("rho_result"))
        assert payload["status"] == "exact"
        assert payload["value"] == 2.0
        assert payload["value_exact"] == "2/1"

    def test_interval_json(self, capsys):
        code, out, _ = invoke(capsys, "rho", "C3", "C4")
        payload = json.loads(out)
        jsonschema.validate(payload, schema("rho_result"))
        assert (payload["lower"], payload["upper"]) == (1.5, 1.6)

    def test_infinite_json(self, capsys):
        code, out, _ = invoke(capsys, "rho", "K2", "K3")
        payload = json.loads(out)
        jsonschema.validate(payload, schema("rho_result"))
        assert payload["status"] == "infinite"

    def test_byte_identical(self, capsys):
        _, out1, _ = invoke(capsys, "rho", "C3", "C4")
        _, out2, _ = invoke(capsys, "rho", "C3", "C4")
        assert out1 == out2

    def test_bad_spec_exit_2(self, capsys):
        code, out, err = invoke(capsys, "rho", "P(", "P2")
        assert code == 2
        assert out == ""
        payload = json.loads(err)
        assert payload["code"] == "graph-spec"


class TestDensity:
    def test_builtin_graphon(self, capsys):
        code, out, _ = invoke(capsys, "density", "K2", "--graphon", "builtin:constant_p:0.5")
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, schema("density"))
        assert payload["density"] == 0.5

    def test_builtin_with_scale(self, capsys):
        code, out, _ = invoke(capsys, "density", "C4", "--graphon", "builtin:looped_star@10")
        assert code == 0
        assert 0 < json.loads(out)["density"] < 1

    def test_graphon_file(self, capsys, tmp_path):
        f = tmp_path / "w.graphon"
        f.write_text("2\n0.5 0.5\n1.0 0.0\n0.0 0.0\n")
        code, out, _ = invoke(capsys, "density", "K3", "--graphon", str(f))
        assert code == 0
        assert json.loads(out)["density"] == pytest.approx(0.125)

    def test_missing_file_exit_2(self, capsys):
        code, _, err = invoke(capsys, "density", "K3", "--graphon", "/nope.graphon")
        assert code == 2
        assert json.loads(err)["code"] == "file-not-found"

    def test_unknown_builtin_exit_2(self, capsys):
        code, _, err = invoke(capsys, "density", "K3", "--graphon", "builtin:nope")
        assert code == 2
        assert json.loads(err)["code"] == "domain"

    def test_text_format(self, capsys):
        code, out, _ = invoke(capsys, "--format", "text", "density", "K2",
                              "--graphon", "builtin:constant_p:0.25")
        assert code == 0
        assert float(out.strip()) == 0.25


class TestCertify:
    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "certify", "C3", "C4", "--family", "two_clique",
                              "--scales", "1,10", "--claimed", "1.5")
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, schema("certificate_report"))
        assert payload["achieved"] == pytest.approx(1.5)

    def test_csv(self, capsys):
        code, out, _ = invoke(capsys, "--format", "csv", "certify", "C3", "C4",
                              "--family", "two_clique", "--scales", "1,10")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "scale,t_G,t_H,ratio"
        assert len(lines) == 3

    def test_degenerate_exit_2(self, capsys):
        code, _, err = invoke(capsys, "certify", "C3", "C4", "--family", "constant_p",
                              "--params", "1.0", "--scales", "1")
        assert code == 2
        assert json.loads(err)["code"] == "rhokit"


class TestVerify:
    def test_single_suite(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--suite", "holder", "--trials", "10",
                              "--seed", "1")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        for rep in payload["suites"]:
            jsonschema.validate(rep, schema("suite_report"))

    def test_all_suites_with_junit(self, capsys, tmp_path):
        junit = tmp_path / "report.xml"
        code, out, _ = invoke(capsys, "verify", "--suite", "all", "--trials", "5",
                              "--seed", "2", "--junit", str(junit))
        assert code == 0
        assert json.loads(out)["passed"] is True
        assert junit.read_text().startswith("<testsuites>")

    def test_text_format(self, capsys):
        code, out, _ = invoke(capsys, "--format", "text", "verify", "--suite",
                              "kruskal_katona", "--trials", "5", "--seed", "0")
        assert code == 0
        assert "kruskal_katona: pass" in out

    def test_byte_identical(self, capsys):
        _, out1, _ = invoke(capsys, "verify", "--suite", "hub", "--trials", "15", "--seed", "6")
        _, out2, _ = invoke(capsys, "verify", "--suite", "hub", "--trials", "15", "--seed", "6")
        assert out1 == out2


class TestSearch:
    def test_json_and_out_file(self, capsys, tmp_path):
        out_file = tmp_path / "best.graphon"
        code, out, _ = invoke(capsys, "search", "K3", "K2", "--blocks", "2",
                              "--restarts", "1", "--iterations", "25", "--seed", "1",
                              "--out", str(out_file))
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, schema("search_result"))
        assert out_file.exists()

    def test_csv(self, capsys):
        code, out, _ = invoke(capsys, "--format", "csv", "search", "K3", "K2",
                              "--blocks", "2", "--restarts", "1", "--iterations", "25",
                              "--seed", "1")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "g,h,best_ratio,catalog_upper,restarts,blocks"


class TestUsage:
    def test_no_subcommand_exit_2(self, capsys):
        assert invoke(capsys, )[0] == 2

    def test_unknown_flag_exit_2(self, capsys):
        assert invoke(capsys, "rho", "P1", "P2", "--frobnicate")[0] == 2
