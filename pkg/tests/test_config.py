"""Configuration tests

Requirements:
- EnvLoader reads a .env file and lets the system environment override it
- AppConfig picks BVEXT_* defaults; malformed values fall back
- RunConfig rejects non-positive bounds, unknown formats and unknown fields
- Degree and operad bounds default by algebra dimension; dim A >= 4 adds arity-3 slot passes
- Corpus files load into instances; malformed files raise parse and schema errors
"""

import json

import pytest

from app.config import AppConfig, RunConfig
from app.corpus import ALGEBRA_KIND, HOPF_KIND, corpus_files, corpus_path, load_instance, read_json
from app.env_loader import EnvLoader
from bvext.errors import FieldError, ParseError, SchemaError

ENV_KEYS = (
    "BVEXT_MAX_DEGREE", "BVEXT_JOBS", "BVEXT_FIELD", "BVEXT_FORMAT",
    "BVEXT_OPERAD_BOUNDS", "BVEXT_PROGRESS", "DEBUG_LOGGING", "LOG_LEVEL",
)


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)
    return tmp_path


class TestEnvLoader:
    """.env parsing and typed getters"""

    def test_env_file(self, clean_env):
        env_file = clean_env / ".env"
        env_file.write_text('# defaults\nBVEXT_MAX_DEGREE=3\nBVEXT_FIELD="GF5"\n\nBVEXT_OPERAD_BOUNDS=2,2,1\n')
        env = EnvLoader(env_file)
        defaults = env.get_run_defaults()
        assert defaults["max_degree"] == 3
        assert defaults["field"] == "GF5"
        assert defaults["operad_bounds"] == (2, 2, 1)

    def test_system_environment_wins(self, clean_env, monkeypatch):
        (clean_env / ".env").write_text("BVEXT_JOBS=2\n")
        monkeypatch.setenv("BVEXT_JOBS", "4")
        assert EnvLoader(clean_env / ".env").get_int("BVEXT_JOBS") == 4

    def test_malformed_values_fall_back(self, clean_env, monkeypatch):
        monkeypatch.setenv("BVEXT_MAX_DEGREE", "many")
        monkeypatch.setenv("BVEXT_OPERAD_BOUNDS", "2,x")
        defaults = EnvLoader().get_run_defaults()
        assert defaults["max_degree"] is None
        assert defaults["operad_bounds"] is None

    @pytest.mark.parametrize("value,expected", [("true", True), ("1", True), ("on", True), ("no", False)])
    def test_get_bool(self, clean_env, monkeypatch, value, expected):
        monkeypatch.setenv("BVEXT_PROGRESS", value)
        assert EnvLoader().get_bool("BVEXT_PROGRESS") is expected


class TestAppConfig:
    """Environment-level defaults"""

    def test_defaults(self, clean_env):
        config = AppConfig()
        assert config.max_degree is None
        assert config.jobs == 1
        assert config.output_format == "table"
        assert not config.progress

    def test_environment(self, clean_env, monkeypatch):
        monkeypatch.setenv("BVEXT_MAX_DEGREE", "2")
        monkeypatch.setenv("BVEXT_FORMAT", "json")
        monkeypatch.setenv("BVEXT_PROGRESS", "yes")
        config = AppConfig()
        assert config.max_degree == 2
        assert config.output_format == "json"
        assert config.progress

    def test_unknown_format_ignored(self, clean_env, monkeypatch):
        monkeypatch.setenv("BVEXT_FORMAT", "yaml")
        assert AppConfig().output_format == "table"

    def test_registry_with_progress(self, clean_env):
        from app.events.handlers import ConsoleProgressHandler

        registry = AppConfig(progress=True).create_registry()
        assert any(isinstance(h, ConsoleProgressHandler) for h in registry.get_handlers("suite_start"))
        registry = AppConfig().create_registry()
        assert not any(isinstance(h, ConsoleProgressHandler) for h in registry.get_handlers("suite_start"))


class TestRunConfig:
    """Validation and defaults"""

    @pytest.mark.parametrize("kwargs", [
        {"command": "everything"},
        {"command": "bv", "max_degree": 0},
        {"command": "bv", "output_format": "xml"},
        {"command": "bv", "jobs": 0},
        {"command": "operad", "operad_bounds": (2, 2)},
        {"command": "operad", "operad_bounds": (2, 0, 2)},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            RunConfig(**kwargs)

    def test_unknown_field(self):
        with pytest.raises(FieldError):
            RunConfig(command="bv", field_name="GF9")

    def test_degree_defaults(self):
        config = RunConfig(command="cohomology")
        assert config.degree_for(2) == 4
        assert config.degree_for(3) == 4
        assert config.degree_for(4) == 3
        assert RunConfig(command="cohomology", max_degree=2).degree_for(4) == 2

    def test_operad_bound_defaults(self):
        config = RunConfig(command="operad")
        assert config.operad_bounds_for(2) == (3, 3, 3)
        assert config.operad_bounds_for(4) == (2, 2, 2)
        assert RunConfig(command="operad", operad_bounds=(1, 2, 1)).operad_bounds_for(2) == (1, 2, 1)

    def test_operad_passes(self):
        config = RunConfig(command="operad")
        assert config.operad_passes_for(3) == [(3, 3, 3)]
        assert config.operad_passes_for(4) == [(2, 2, 2), (3, 1, 1), (1, 3, 1), (1, 1, 3)]
        assert RunConfig(command="operad", operad_bounds=(2, 2, 1)).operad_passes_for(4) == [(2, 2, 1)]

    def test_dict_round_trip(self):
        config = RunConfig(command="all", max_degree=3, field_name="GF3", output_format="json", jobs=2, operad_bounds=(2, 1, 1))
        again = RunConfig.from_dict(config.to_dict())
        assert again.to_dict() == config.to_dict()
        assert again.field.characteristic == 3

    def test_report_settings_omit_jobs(self):
        serial = RunConfig(command="validate", max_degree=2)
        parallel = RunConfig(command="validate", max_degree=2, jobs=4)
        assert "jobs" not in parallel.report_settings()
        assert serial.report_settings() == parallel.report_settings()
        assert parallel.to_dict()["jobs"] == 4


class TestCorpus:
    """Loading presentations"""

    def test_corpus_is_shipped(self):
        names = {p.stem for p in corpus_files()}
        assert {"dual_numbers", "sweedler", "nakayama", "broken_unit"} <= names

    def test_kinds(self):
        assert load_instance(corpus_path("dual_numbers")).kind == ALGEBRA_KIND
        sweedler = load_instance(corpus_path("sweedler"))
        assert sweedler.kind == HOPF_KIND
        assert sweedler.is_hopf
        assert sweedler.metadata()["dim"] == 4

    def test_field_override(self):
        instance = load_instance(corpus_path("dual_numbers"), field_override=RunConfig(command="bv", field_name="GF3").field)
        assert instance.field.characteristic == 3

    def test_parse_error(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ParseError) as excinfo:
            read_json(path)
        assert excinfo.value.exit_code == 3
        assert excinfo.value.details["line"] == 1

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            load_instance(tmp_path / "absent.json")

    def test_schema_errors(self, tmp_path):
        for payload in ([1, 2], {"dim": 2}, {"dim": 2, "mul": [[[1]]], "unit": [1, 0]}):
            path = tmp_path / "schema.json"
            path.write_text(json.dumps(payload))
            with pytest.raises(SchemaError):
                load_instance(path)

    def test_name_falls_back_to_file_stem(self, tmp_path):
        path = tmp_path / "scalar.json"
        path.write_text(json.dumps({"dim": 1, "mul": [[[1]]], "unit": [1]}))
        assert load_instance(path).name == "scalar"
