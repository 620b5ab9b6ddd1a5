import json

import pytest

from lexicon import FinalCluster, TermTable
from pipeline import (
    ARTIFACTS,
    PipelineConfig,
    compute_stats,
    emit_clusters,
    read_final_clusters,
    run_all,
    run_phase,
    write_final_clusters,
)


def load_config(pipeline_dir, **overrides):
    config = PipelineConfig.load(str(pipeline_dir / "config.yaml"))
    values = config.as_plain_dict()
    values.update(overrides)
    return PipelineConfig(**values)


def read_json(path):
    with open(path, "r", encoding="utf-8") as file:
        return json.load(file)


def test_config_paths_resolve_next_to_the_config(pipeline_dir):
    config = load_config(pipeline_dir)
    assert config.terms == str(pipeline_dir / "terms.txt")
    assert config.nlist == 4 and config.nprobe == 4
    assert config.conflict_policy.value == "paper-literal"
    assert config.ratio_comparator.value == "gt"


def test_invalid_config_is_rejected(pipeline_dir):
    with pytest.raises(AssertionError, match="nprobe"):
        load_config(pipeline_dir, nprobe=8)


def test_full_pipeline_matches_golden_output(pipeline_dir):
    config = load_config(pipeline_dir)
    funnel = run_all(config)

    output = pipeline_dir / "output"
    assert read_json(output / "clusters.json") == read_json(pipeline_dir / "expected_clusters.json")
    assert read_json(output / "stats.json") == read_json(pipeline_dir / "expected_stats.json")

    assert funnel["index"]["terms"] == 30
    assert funnel["candidates"]["candidates"] == 58
    assert funnel["gate"]["edges"] == 37
    assert funnel["cluster"]["multi_member_terms"] == 1
    assert funnel["parents"]["dictionary_parents"] == 2

    manifest = read_json(output / "manifest.json")
    assert manifest["seed"] == 0
    assert set(manifest["phases"]) == set(ARTIFACTS)
    assert manifest["phases"]["gate"]["rows"]["edges"] == 37


def test_rerun_and_worker_count_are_byte_identical(pipeline_dir, tmp_path):
    first = load_config(pipeline_dir, output_dir=str(tmp_path / "one"))
    second = load_config(pipeline_dir, output_dir=str(tmp_path / "two"), workers=2)
    run_all(first)
    run_all(second)
    for name in ("candidates.tsv", "edges.tsv", "clusters.tsv", "final_clusters.tsv", "clusters.json", "stats.json"):
        assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "two" / name).read_bytes()

    payload = (tmp_path / "one" / "clusters.json").read_bytes()
    run_all(first)
    assert (tmp_path / "one" / "clusters.json").read_bytes() == payload
    assert "ü".encode("utf-8") in payload


def test_soft_state_dump(pipeline_dir):
    config = load_config(pipeline_dir, dump_soft_state=True)
    for phase in ("index", "candidates", "gate", "cluster"):
        run_phase(phase, config)
    dump = read_json(pipeline_dir / "output" / "soft_clusters.json")
    assert dump["multi_members"] == [{"term": "yüz", "cluster_ids": [3, 7]}]


def test_missing_upstream_artifact_names_the_path(pipeline_dir):
    config = load_config(pipeline_dir)
    with pytest.raises(FileNotFoundError, match="index.lxivf"):
        run_phase("candidates", config)


def test_stale_intermediate_is_rejected(pipeline_dir):
    run_phase("index", load_config(pipeline_dir))
    run_phase("candidates", load_config(pipeline_dir))
    with pytest.raises(RuntimeError, match="stale"):
        run_phase("gate", load_config(pipeline_dir, sim_threshold=0.80))


def test_changed_input_invalidates_downstream(pipeline_dir):
    config = load_config(pipeline_dir)
    run_phase("index", config)
    with open(pipeline_dir / "terms.txt", "a", encoding="utf-8") as file:
        file.write("kalem\n")
    with pytest.raises(RuntimeError, match="stale"):
        run_phase("candidates", load_config(pipeline_dir))


def test_missing_scorer_table(pipeline_dir):
    config = load_config(pipeline_dir, scorer_table=None)
    run_phase("index", config)
    run_phase("candidates", config)
    with pytest.raises(FileNotFoundError, match="scorer_table"):
        run_phase("gate", config)


def test_unknown_phase(pipeline_dir):
    with pytest.raises(ValueError, match="unknown phase"):
        run_phase("embed", load_config(pipeline_dir))


def test_stats_on_given_sizes():
    clusters = [set(range(2)), set(range(10, 13)), set(range(100, 186))]
    stats = compute_stats(clusters, 200)
    assert (stats.cluster_count, stats.median_size, stats.max_size) == (3, 3, 86)
    assert stats.mean_size == 30.33
    assert stats.unclustered_term_count == 200 - 91


def test_stats_even_count_uses_lower_median():
    assert compute_stats([{0, 1}, {2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12, 13}], 14).median_size == 3


def test_stats_of_no_clusters():
    stats = compute_stats([], 5)
    assert (stats.cluster_count, stats.median_size, stats.mean_size, stats.max_size) == (0, 0, 0.0, 0)
    assert stats.unclustered_term_count == 5


def test_emit_format(tmp_path):
    table = TermTable(("b", "a", "c"))
    path = tmp_path / "clusters.json"
    assert emit_clusters([FinalCluster(0, {1, 0}, 1)], table, path) == 1
    assert read_json(path) == [{"cluster_id": 0, "parent": "a", "members": ["b", "a"]}]

    emit_clusters([], table, path)
    assert read_json(path) == []


def test_final_cluster_tsv(tmp_path):
    clusters = [FinalCluster(0, {4, 8, 5}, 4), FinalCluster(1, {9, 10}, 10)]
    write_final_clusters(clusters, tmp_path / "final.tsv")
    assert list(read_final_clusters(tmp_path / "final.tsv")) == clusters


def test_downstream_phases_rerun_from_kept_intermediates(pipeline_dir):
    run_all(load_config(pipeline_dir))
    output = pipeline_dir / "output"
    payload = (output / "clusters.json").read_bytes()
    for name in ("clusters.tsv", "final_clusters.tsv", "clusters.json"):
        (output / name).unlink()

    for phase in ("cluster", "parents", "emit"):
        run_phase(phase, load_config(pipeline_dir))
    assert (output / "clusters.json").read_bytes() == payload
