import json
import os
import sys

import pytest

import lexclust
from clustering import RatioComparator
from initialize import initialize, initialize_cluster_config, initialize_config

TASKS = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "tasks")


def parse(monkeypatch, *argv):
    monkeypatch.setattr(sys, "argv", ["lexclust.py", *argv])
    return initialize(extra_args_provider=lambda parser: parser)


def run_cli(monkeypatch, *argv):
    monkeypatch.setattr(sys, "argv", ["lexclust.py", *argv])
    lexclust.main()


def test_command_line_overrides_the_yaml(monkeypatch, pipeline_dir):
    config_path = str(pipeline_dir / "config.yaml")
    args = parse(
        monkeypatch, "--config", config_path, "--syn-conf", "0.8", "--ratio", "0.6", "--ratio-comparator", "ge", "--dump-soft-state"
    )
    config = initialize_config(args)
    assert config.synonym_confidence_threshold == 0.8
    assert config.intersection_ratio_threshold == 0.6
    assert config.ratio_comparator is RatioComparator.GE
    assert config.dump_soft_state
    assert config.nlist == 4 and config.sim_threshold == 0.70
    assert config.terms == str(pipeline_dir / "terms.txt")


def test_override_is_checked_against_the_yaml(monkeypatch, pipeline_dir):
    args = parse(monkeypatch, "--config", str(pipeline_dir / "config.yaml"), "--nprobe", "8")
    with pytest.raises(AssertionError, match="nprobe"):
        initialize_config(args)


def test_pipeline_needs_a_config(monkeypatch):
    with pytest.raises(ValueError, match="--config"):
        initialize_config(parse(monkeypatch, "--ratio", "0.6"))


def test_cluster_config_without_yaml(monkeypatch):
    config = initialize_cluster_config(parse(monkeypatch, "--ratio", "0.6", "--ratio-comparator", "ge"))
    assert config.intersection_ratio_threshold == 0.6
    assert config.ratio_comparator is RatioComparator.GE

    config = initialize_cluster_config(parse(monkeypatch))
    assert config.intersection_ratio_threshold == 0.51
    assert config.ratio_comparator is RatioComparator.GT


def test_all_writes_the_final_clusters(monkeypatch, pipeline_dir):
    run_cli(monkeypatch, "all", "--config", str(pipeline_dir / "config.yaml"))
    with open(pipeline_dir / "output" / "clusters.json", "r", encoding="utf-8") as file:
        emitted = json.load(file)
    with open(pipeline_dir / "expected_clusters.json", "r", encoding="utf-8") as file:
        assert emitted == json.load(file)


def test_single_phase_writes_only_its_artifact(monkeypatch, pipeline_dir):
    run_cli(monkeypatch, "index", "--config", str(pipeline_dir / "config.yaml"))
    output = pipeline_dir / "output"
    assert (output / "index.lxivf").is_file()
    assert not (output / "candidates.tsv").exists()
    assert not (output / "clusters.json").exists()


def test_eval_needs_a_spec(monkeypatch):
    with pytest.raises(ValueError, match="--spec"):
        run_cli(monkeypatch, "eval")


def test_eval_writes_one_report_per_spec(monkeypatch, tmp_path):
    output = tmp_path / "contamination.json"
    run_cli(monkeypatch, "eval", "--spec", TASKS, "--output", str(output), "--ratio", "0.6")
    with open(output, "r", encoding="utf-8") as file:
        reports = json.load(file)
    assert len(reports) == 4
    assert all("baseline_comparison" in report for report in reports.values())


def test_unknown_command_is_rejected(monkeypatch):
    with pytest.raises(SystemExit):
        run_cli(monkeypatch, "embed")
