"""Command-line tests

Requirements:
- Exit codes: 0 pass, 1 failed check, 2 usage, 3 parse, 4 schema or field, 5 budget
- JSON output is versioned, parses back, and does not depend on --jobs
- `all` skips groups an invalid or incomplete instance cannot run
- Hopf inputs also get the HH table next to Ext, and HH suites under bv when Frobenius
- validate runs the aYD checks of the Frobenius and trivial contraactions
- The table names every suite and ends with a verdict
- --progress prints suite lines to stderr
"""

import json

import pytest

from app.config import RunConfig
from app.corpus import corpus_path
from app.main import build_parser, exit_code_for, main, run
from app.report import RunReport, parse_json, render_json, render_table
from bvext.constants import SCHEMA_VERSION
from bvext.errors import SchemaError
from bvext.results import SuiteReport

ENV_KEYS = (
    "BVEXT_MAX_DEGREE", "BVEXT_JOBS", "BVEXT_FIELD", "BVEXT_FORMAT",
    "BVEXT_OPERAD_BOUNDS", "BVEXT_PROGRESS", "DEBUG_LOGGING", "LOG_LEVEL",
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)


def _path(name):
    return str(corpus_path(name))


class TestExitCodes:
    """main() return values"""

    def test_passing_run(self, capsys):
        code = main(["bv", _path("dual_numbers"), "--max-degree", "3", "--format", "json"])
        assert code == 0
        [report] = parse_json(capsys.readouterr().out)
        assert report.passed
        assert [s.suite for s in report.suites] == ["gerstenhaber", "bv"]

    def test_failed_check(self, capsys):
        assert main(["validate", _path("broken_unit")]) == 1
        out = capsys.readouterr().out
        assert "unitality" in out
        assert "== verdict: FAIL" in out

    def test_parse_error(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{\"dim\": ")
        assert main(["validate", str(path), "--format", "json"]) == 3
        [report] = parse_json(capsys.readouterr().out)
        assert report.error["error_type"] == "ParseError"

    def test_schema_error(self, tmp_path):
        path = tmp_path / "schema.json"
        path.write_text(json.dumps({"dim": 2, "unit": [1, 0]}))
        assert main(["validate", str(path)]) == 4

    def test_unknown_field(self):
        assert main(["validate", _path("dual_numbers"), "--field", "GF4"]) == 4

    def test_budget_exceeded(self, capsys):
        assert main(["cohomology", _path("dual_numbers"), "--max-degree", "20", "--format", "json"]) == 5
        [report] = parse_json(capsys.readouterr().out)
        assert report.error["error_type"] == "BudgetExceeded"
        assert report.error["group"] == "cohomology"

    def test_usage_errors(self):
        assert main(["validate", _path("dual_numbers"), "--jobs", "0"]) == 2
        assert main(["cohomology", _path("dual_numbers"), "--max-degree", "0"]) == 2
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate", _path("dual_numbers")])
        assert excinfo.value.code == 2

    def test_errors_take_precedence(self):
        failed = RunReport("validate", suites=[SuiteReport("validate")])
        failed.suites[0].record("associativity", False)
        broken = RunReport("validate", error={"error_type": "ParseError", "exit_code": 3})
        assert exit_code_for([failed]) == 1
        assert exit_code_for([failed, broken]) == 3
        assert exit_code_for([]) == 0


class TestCommands:
    """Subcommands and suite groups"""

    def test_parser_knows_every_command(self):
        parser = build_parser()
        for command in ("validate", "cohomology", "operad", "cyclic", "bv", "nakayama", "dual", "all"):
            args = parser.parse_args([command, "x.json"])
            assert args.command == command

    def test_cohomology_table(self, capsys):
        assert main(["cohomology", _path("truncated_cubic"), "--max-degree", "3"]) == 0
        out = capsys.readouterr().out
        assert "HH dims: (3, 2, 2, 2)" in out
        assert "-- cosimplicial: PASS" in out

    def test_hopf_cohomology(self, capsys):
        assert main(["cohomology", _path("sweedler"), "--max-degree", "3", "--format", "json"]) == 0
        [report] = parse_json(capsys.readouterr().out)
        assert report.suites[0].dimensions["Ext"] == [1, 0, 1, 0]
        assert report.instance["kind"] == "hopf"

    def test_hopf_cohomology_reports_hh_and_ext(self, capsys):
        """ℚ[C₂] is semisimple, so HH is its centre and Ext is k"""
        assert main(["cohomology", _path("group_c2"), "--max-degree", "3", "--format", "json"]) == 0
        [report] = parse_json(capsys.readouterr().out)
        assert report.suites[0].dimensions == {"Ext": [1, 0, 0, 0], "HH": [2, 0, 0, 0]}
        assert [s.suite for s in report.suites] == ["cohomology", "cosimplicial", "hh_cosimplicial"]
        assert report.passed

    def test_hopf_bv_runs_hh_suites(self, capsys):
        assert main(["bv", _path("group_c2"), "--max-degree", "3", "--format", "json"]) == 0
        [report] = parse_json(capsys.readouterr().out)
        assert [s.suite for s in report.suites] == ["ext_bv", "hh_gerstenhaber", "hh_bv"]
        hh = report.suites[1]
        assert hh.dimensions["H"] == [2, 0, 0, 0]
        assert report.suites[2].passed
        assert report.suites[2].checks

    def test_operad_reaches_arity_three_on_dim_four(self, capsys):
        assert main(["operad", _path("sweedler"), "--format", "json"]) == 0
        [report] = parse_json(capsys.readouterr().out)
        names = [s.suite for s in report.suites]
        assert names == ["operad", "operad_3_1_1", "operad_1_3_1", "operad_1_1_3", "composition_oracle"]
        assert all(s.passed for s in report.suites)

    def test_bv_skipped_when_unstable(self, capsys):
        assert main(["bv", _path("nakayama"), "--max-degree", "2", "--format", "json"]) == 0
        [report] = parse_json(capsys.readouterr().out)
        skipped = report.suites[-1]
        assert skipped.suite == "bv"
        assert skipped.findings[0].startswith("skipped:")

    def test_all_on_invalid_instance(self, capsys):
        assert main(["all", _path("broken_unit"), "--format", "json"]) == 1
        [report] = parse_json(capsys.readouterr().out)
        assert report.suites[0].suite == "validate"
        skipped = [s for s in report.suites if s.findings and s.findings[0].startswith("skipped:")]
        assert len(skipped) == 6

    def test_explicit_command_raises_missing_structure(self, capsys):
        """Without `all`, a missing Frobenius functional is an error"""
        assert main(["nakayama", _path("broken_unit"), "--format", "json"]) == 6
        [report] = parse_json(capsys.readouterr().out)
        assert report.error["error_type"] == "NotFrobenius"

    def test_progress_on_stderr(self, capsys):
        main(["bv", _path("dual_numbers"), "--max-degree", "2", "--progress"])
        err = capsys.readouterr().err
        assert "[gerstenhaber] running" in err
        assert "[bv] PASS" in err


class TestReports:
    """JSON envelope, determinism and parallel runs"""

    def setup_method(self):
        self.inputs = [corpus_path("dual_numbers"), corpus_path("group_c2")]

    def test_multiple_inputs_envelope(self, capsys):
        main(["validate", *map(str, self.inputs), "--format", "json"])
        data = json.loads(capsys.readouterr().out)
        assert data["schema_version"] == SCHEMA_VERSION
        assert [r["instance"]["name"] for r in data["reports"]] == ["dual_numbers", "group_c2"]

    def test_json_is_deterministic(self):
        config = RunConfig(command="validate", inputs=self.inputs)
        first = render_json(run(config), include_timing=False)
        second = render_json(run(config), include_timing=False)
        assert first == second
        assert "timing" not in first

    def test_jobs_do_not_change_the_report(self):
        serial = run(RunConfig(command="validate", inputs=self.inputs))
        parallel = run(RunConfig(command="validate", inputs=self.inputs, jobs=2))
        assert render_json(serial, include_timing=False) == render_json(parallel, include_timing=False)

    def test_parse_round_trip(self):
        reports = run(RunConfig(command="validate", inputs=self.inputs))
        again = parse_json(render_json(reports))
        assert [r.to_dict() for r in again] == [r.to_dict() for r in reports]

    def test_unknown_schema_version(self):
        data = RunReport("validate").to_dict()
        data["schema_version"] = SCHEMA_VERSION + 1
        with pytest.raises(SchemaError):
            RunReport.from_dict(data)

    def test_table(self):
        reports = run(RunConfig(command="validate", inputs=self.inputs))
        table = render_table(reports)
        assert table.count("== verdict: PASS") == 2
        assert "-- frobenius: PASS" in table
        assert "-- hopf: PASS" in table
        assert table.count("-- ayd: PASS") == 2
        assert "== group_c2 (hopf over Q, dim 2) :: validate" in table
