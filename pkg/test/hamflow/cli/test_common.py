# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from argparse import Namespace
from dataclasses import dataclass
from pathlib import Path
import json
import logging
import pytest
import yaml

from . import make_args
from hamflow import DataError, NumericError, __version__
from hamflow._logs import LOG
from hamflow.cli._common import (
    EXIT_DATA,
    EXIT_NUMERIC,
    EXIT_USAGE,
    HamflowCliErrorResult,
    HamflowCliResult,
    RunConfig,
    UsageError,
    artifact_comment,
    load_model,
    load_run_config,
    print_cli_result,
    read_config_file,
    run_config_from_args,
)


@pytest.mark.parametrize(
    "name,text",
    [
        pytest.param("run.json", '{"rounds": 7, "direction_mode": "raw"}', id="JSON"),
        pytest.param("run.yaml", "rounds: 7\ndirection_mode: raw\n", id="YAML"),
        pytest.param(
            "run.conf", "# comment\nrounds = 7\n\ndirection_mode = 'raw'  # trailing\n", id="Lines"
        ),
    ],
)
def test_read_config_file(tmp_path: Path, name: str, text: str):
    path = tmp_path / name
    path.write_text(text)

    assert read_config_file(path) == {"rounds": 7, "direction_mode": "raw"}


@pytest.mark.parametrize(
    "name,text,message",
    [
        pytest.param("run.json", "{rounds", "formatted incorrectly", id="Broken JSON"),
        pytest.param("run.yaml", "- 1\n- 2\n", "mapping of settings", id="YAML list"),
        pytest.param("run.conf", "rounds 7\n", "line 1: expected 'key = value'", id="Bad line"),
    ],
)
def test_read_config_file_rejects(tmp_path: Path, name: str, text: str, message: str):
    path = tmp_path / name
    path.write_text(text)

    with pytest.raises(UsageError, match=message):
        read_config_file(path)


def test_missing_config_file(tmp_path: Path):
    with pytest.raises(UsageError, match="does not exist"):
        read_config_file(tmp_path / "none.yaml")


class TestRunConfig:
    def test_defaults(self):
        config = RunConfig()

        assert (config.min_orbit_len, config.rounds, config.haar_target_count) == (8, 20, 27000)
        assert (config.scale_factor, config.window_stride, config.nms_iou) == (1.25, 4, 0.3)
        assert config.direction_mode == "wrapped"

    def test_precedence(self, tmp_path: Path):
        path = tmp_path / "run.json"
        path.write_text('{"rounds": 7, "threads": 2, "seed": 5}')

        config = load_run_config(path, threads=6, seed=None)

        assert (config.rounds, config.threads, config.seed) == (7, 6, 5)

    @pytest.mark.parametrize(
        "values,message",
        [
            pytest.param({"rounds": 0}, "rounds", id="Zero rounds"),
            pytest.param({"scale_factor": 1.0}, "scale_factor", id="Scale factor of one"),
            pytest.param({"direction_mode": "sideways"}, "direction_mode", id="Unknown mode"),
            pytest.param({"orbit_length": 3}, "orbit_length", id="Unknown setting"),
        ],
    )
    def test_rejects(self, tmp_path: Path, values: dict, message: str):
        path = tmp_path / "run.json"
        path.write_text(json.dumps(values))

        with pytest.raises(UsageError, match=f"Invalid configuration from .*{message}"):
            load_run_config(path)

    def test_rejects_overrides(self):
        with pytest.raises(UsageError, match="from command line"):
            RunConfig().with_overrides(threads=0)

    def test_hash_ignores_threads(self):
        base = RunConfig()

        assert len(base.config_hash()) == 16
        assert base.config_hash() == base.with_overrides(threads=8).config_hash()
        assert base.config_hash() != base.with_overrides(rounds=21).config_hash()

    def test_artifact_comment(self):
        config = RunConfig()
        assert artifact_comment(config) == f"hamflow {__version__} config={config.config_hash()}"

    def test_from_args(self):
        config = run_config_from_args(make_args(threads=3, seed=9, verbose=True), rounds=4)

        assert (config.threads, config.seed, config.rounds) == (3, 9, 4)
        assert LOG.level == logging.DEBUG
        run_config_from_args(make_args())
        assert LOG.level == logging.INFO

    def test_from_args_without_common_flags(self):
        assert run_config_from_args(Namespace()) == RunConfig()


@dataclass
class CountResult(HamflowCliResult):
    count: int
    note: str = ""


@pytest.mark.parametrize(
    "exc,exit_code",
    [
        pytest.param(UsageError("bad flag"), EXIT_USAGE, id="Usage"),
        pytest.param(DataError("bad data"), EXIT_DATA, id="Data"),
        pytest.param(NumericError("undefined"), EXIT_NUMERIC, id="Numeric"),
    ],
)
def test_error_exit_codes(capsys, exc: Exception, exit_code: int):
    @print_cli_result
    def do_fail(args: Namespace) -> HamflowCliResult:
        raise exc

    with pytest.raises(SystemExit) as exit_info:
        do_fail(make_args())

    assert exit_info.value.code == exit_code
    assert capsys.readouterr().out == f"ERROR: {exc}\n"
    assert HamflowCliErrorResult.from_exception(exc).exit_code == exit_code


@pytest.mark.parametrize(
    "output,loader",
    [
        pytest.param("json", json.loads, id="JSON"),
        pytest.param("yaml", yaml.safe_load, id="YAML"),
    ],
)
def test_structured_output_omits_empty_fields(capsys, output: str, loader):
    @print_cli_result
    def do_count(args: Namespace) -> HamflowCliResult:
        return CountResult(status="success", message="Counted.", count=0)

    do_count(make_args(output=output))

    assert loader(capsys.readouterr().out) == {
        "status": "success",
        "message": "Counted.",
        "count": 0,
    }


class TestLoadModel:
    def test_loads_the_referenced_bank(self, bowl_model: Path):
        bundle = load_model(bowl_model)

        assert bundle.lattice == (20, 20)
        assert bundle.classifier.feature_indices == (0,)
        assert bundle.normalize_windows is False

    def test_missing_model(self, tmp_path: Path):
        with pytest.raises(DataError, match="does not exist"):
            load_model(tmp_path / "none.json")

    def test_changed_bank(self, bowl_model: Path):
        bank_path = bowl_model.with_name("bowl.bank.json")
        bank_path.write_text(bank_path.read_text() + "\n")

        with pytest.raises(DataError, match="changed since the model was trained"):
            load_model(bowl_model)

    def test_explicit_bank_skips_the_checksum(self, bowl_model: Path, tmp_path: Path):
        copy = tmp_path / "copy.bank.json"
        copy.write_text(bowl_model.with_name("bowl.bank.json").read_text() + "\n")

        assert load_model(bowl_model, copy).lattice == (20, 20)

    def test_without_bank_reference(self, bowl_model: Path):
        document = json.loads(bowl_model.read_text())
        del document["bank_reference"]
        bowl_model.write_text(json.dumps(document))

        with pytest.raises(DataError, match="does not reference a feature bank"):
            load_model(bowl_model)

    def test_feature_id_mismatch(self, bowl_model: Path):
        document = json.loads(bowl_model.read_text())
        document["rounds"][0]["feature_id"] = "conley_index:4"
        bowl_model.write_text(json.dumps(document))

        with pytest.raises(DataError, match="the classifier expects 'conley_index:4'"):
            load_model(bowl_model)

    def test_feature_outside_the_bank(self, bowl_model: Path):
        document = json.loads(bowl_model.read_text())
        document["rounds"][0]["feature_idx"] = 100000
        bowl_model.write_text(json.dumps(document))

        with pytest.raises(DataError, match="reads feature 100000"):
            load_model(bowl_model)
