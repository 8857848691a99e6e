"""CLI behavior: subcommands, exit codes, report shape, determinism."""

import json
from pathlib import Path

import pytest

from gaugemods.cli import main
from gaugemods.scenario import (
    ScenarioError,
    load_scenario,
    run_scenario,
    validate_scenario,
)

DATA = Path(__file__).parent / "data"
SCENARIOS = Path(__file__).parents[1] / "src" / "gaugemods" / "scenarios"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestExitCodes:
    def test_bundled_sphere_scenario_passes(self, capsys):
        code, out = run_cli(capsys, "run", str(SCENARIOS / "sphere_gauge_flat.json"),
                            "--samples", "5", "--no-timing")
        assert code == 0
        report = json.loads(out)
        assert report["schema"] == "1" and report["status"] == "pass"

    def test_broken_gauge_fails_with_witness(self, capsys):
        code, out = run_cli(capsys, "gauge", "verify", str(DATA / "broken_gauge.json"),
                            "--no-timing")
        assert code == 1
        report = json.loads(out)
        (validate,) = [c for c in report["checks"] if c["name"] == "gauge.validate"]
        assert validate["status"] == "fail"
        assert "(1,2)" in validate["witness"]["axiom3_flatness"]

    def test_schema_violation_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"schema": "1", "kind": "nonsense"}))
        code, _ = run_cli(capsys, "run", str(bad))
        assert code == 2

    def test_missing_file_exits_2(self, capsys):
        code, _ = run_cli(capsys, "run", "/nonexistent/path.json")
        assert code == 2

    def test_run_without_scenarios_exits_2(self, capsys):
        code, _ = run_cli(capsys, "run")
        assert code == 2

    def test_budget_overflow_exits_3(self, capsys):
        code, _ = run_cli(capsys, "casimir", "table", "7")
        assert code == 3

    def test_empty_check_list_passes_vacuously(self, capsys, tmp_path):
        scn = json.loads((SCENARIOS / "sphere_gauge_flat.json").read_text())
        scn["checks"] = []
        path = tmp_path / "empty.json"
        path.write_text(json.dumps(scn))
        code, out = run_cli(capsys, "run", str(path), "--no-timing")
        assert code == 0
        report = json.loads(out)
        assert report["scenarios"][0]["checks"] == []
        assert report["status"] == "pass"


class TestSubcommands:
    def test_variety_check(self, capsys):
        code, out = run_cli(capsys, "variety", "check",
                            str(SCENARIOS / "sphere_variety.json"), "--no-timing")
        assert code == 0
        names = {c["name"] for c in json.loads(out)["checks"]}
        assert {"variety.smooth", "variety.charts", "variety.proper"} <= names

    def test_variety_charts(self, capsys):
        code, out = run_cli(capsys, "variety", "charts",
                            str(SCENARIOS / "sphere_variety.json"), "--no-timing")
        assert code == 0
        (charts,) = json.loads(out)["checks"]
        assert charts["witness"]["minors"] == ["x", "y", "z"]

    def test_casimir_table_2(self, capsys):
        code, out = run_cli(capsys, "casimir", "table", "2", "--no-timing")
        assert code == 0
        (table,) = json.loads(out)["checks"]
        rows = table["witness"]["rows"]
        assert [r["omega"] for r in rows] == [["0", "0"], ["1", "2"], ["2", "2"]]

    def test_casimir_table_1(self, capsys):
        code, out = run_cli(capsys, "casimir", "table", "1", "--no-timing")
        assert code == 0
        (table,) = json.loads(out)["checks"]
        assert [r["omega"] for r in table["witness"]["rows"]] == [["0"], ["1"]]

    def test_casimir_table_3(self, capsys):
        code, out = run_cli(capsys, "casimir", "table", "3", "--no-timing")
        assert code == 0
        (table,) = json.loads(out)["checks"]
        rows = table["witness"]["rows"]
        assert len(rows) == 4
        assert all(r["P"] == {"2": "0", "3": "0"} for r in rows)
        assert all(r["verdict"] == "possibly exceptional" for r in rows)

    def test_circle_verify_custom_alpha(self, capsys):
        code, out = run_cli(capsys, "circle", "verify", "--alpha", "2/7",
                            "--grid", "2", "--no-timing")
        assert code == 0
        report = json.loads(out)
        statuses = {c["name"]: c["status"] for c in report["checks"]}
        assert statuses["circle.p_operator"] == "computed"
        assert statuses["circle.witt"] == "pass"

    def test_derham_verify(self, capsys):
        code, out = run_cli(capsys, "derham", "verify",
                            str(SCENARIOS / "derham_affine2.json"),
                            "--samples", "5", "--no-timing")
        assert code == 0
        names = {c["name"] for c in json.loads(out)["checks"]}
        assert "derham.obstruction" in names

    def test_text_output(self, capsys):
        code, out = run_cli(capsys, "casimir", "table", "2", "--text", "--no-timing")
        assert code == 0
        assert "glrep.table" in out and "PASS" in out

    def test_flags_before_subcommand(self, capsys):
        code, out = run_cli(capsys, "--no-timing", "casimir", "table", "1")
        assert code == 0
        assert "elapsed_ms" not in out


class TestDeterminism:
    def test_identical_seed_identical_bytes(self, capsys):
        args = ["run", "--bundled", "--no-timing", "--samples", "5", "--seed", "3"]
        code1, out1 = run_cli(capsys, *args)
        code2, out2 = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_timing_fields_present_by_default(self, capsys):
        code, out = run_cli(capsys, "casimir", "table", "2")
        assert code == 0
        (table,) = json.loads(out)["checks"]
        assert "elapsed_ms" in table


class TestScenarioValidation:
    def test_unknown_kind(self):
        with pytest.raises(ScenarioError):
            validate_scenario({"schema": "1", "kind": "mystery"})

    def test_wrong_schema_version(self):
        with pytest.raises(ScenarioError):
            validate_scenario({"schema": "99", "kind": "circle"})

    def test_bad_alpha(self):
        with pytest.raises(ScenarioError):
            validate_scenario({"schema": "1", "kind": "circle", "alphas": ["x/y"]})

    def test_gauge_requires_module(self):
        with pytest.raises(ScenarioError):
            validate_scenario({
                "schema": "1", "kind": "gauge",
                "variety": {"variables": ["x"], "generators": []},
                "chart": 0,
            })

    def test_bad_generator_expression(self, tmp_path):
        scn = {
            "schema": "1", "kind": "variety",
            "variety": {"variables": ["x"], "generators": ["x +* 2"]},
        }
        with pytest.raises(ScenarioError):
            run_scenario(validate_scenario(scn))

    def test_unknown_chart_name(self):
        scn = validate_scenario({
            "schema": "1", "kind": "gauge",
            "variety": {"variables": ["x", "y", "z"],
                        "generators": ["x^2+y^2+z^2-1"]},
            "chart": "w",
            "module": {"N": 2, "kind": "exterior", "k": 1},
        })
        with pytest.raises(ScenarioError):
            run_scenario(scn)

    def test_load_scenario_round_trip(self):
        scn = load_scenario(SCENARIOS / "circle.json")
        assert scn["kind"] == "circle"

    def test_matrix_gauge_field_from_json(self):
        # a 2x2 matrix gauge field over gl_1 validates through the loader
        from gaugemods.scenario import build_gauge_field, build_module, build_variety, select_chart
        scn = validate_scenario({
            "schema": "1", "kind": "gauge",
            "variety": {"variables": ["t", "s"], "generators": ["t*s-1"]},
            "chart": "t",
            "module": {"N": 1, "kind": "custom",
                       "matrices": [[["1/2", "0"], ["0", "1/2"]]]},
            "B": [[["0", "t"], ["1", "0"]]],
        })
        v = build_variety(scn["variety"])
        chart = select_chart(v, scn["chart"])
        module = build_module(scn["module"])
        field = build_gauge_field(scn, chart, module.dim)
        assert all(r.ok for r in field.validate(module))

    def test_localized_entry_with_hpower(self):
        from gaugemods.scenario import build_scalar_gauge, build_variety, select_chart
        scn = validate_scenario({
            "schema": "1", "kind": "derham",
            "variety": {"variables": ["x", "y", "z"],
                        "generators": ["x^2+y^2+z^2-1"]},
            "chart": "z",
            "B": [{"num": "x", "hpower": 1}, {"num": "y", "hpower": 1}],
        })
        v = build_variety(scn["variety"])
        chart = select_chart(v, scn["chart"])
        B = build_scalar_gauge(scn, chart)
        assert B[0] == chart.localization.element(v.ring.var("x"), 1)


class TestBareVarietyFile:
    def test_variety_check_accepts_bare_schema(self, capsys, tmp_path):
        bare = tmp_path / "bare.json"
        bare.write_text(json.dumps({
            "variables": ["x", "y", "z"],
            "generators": ["x^2+y^2+z^2-1"],
        }))
        code, out = run_cli(capsys, "variety", "check", str(bare), "--no-timing")
        assert code == 0
        names = {c["name"] for c in json.loads(out)["checks"]}
        assert "variety.smooth" in names

    def test_singular_cone_fails_smoothness(self, capsys, tmp_path):
        cone = tmp_path / "cone.json"
        cone.write_text(json.dumps({
            "variables": ["x", "y", "z"],
            "generators": ["x^2+y^2-z^2"],
        }))
        code, out = run_cli(capsys, "variety", "check", str(cone), "--no-timing")
        assert code == 1
        checks = {c["name"]: c["status"] for c in json.loads(out)["checks"]}
        assert checks["variety.smooth"] == "fail"
