import os
import json
import time

from typing import Dict, Tuple

from clustering import ParentDictionary, select_parent, soft_to_hard
from lexicon import (
    FinalCluster,
    RelationLabel,
    check_disjoint,
    load_embeddings,
    load_term_table,
    print_rank_0,
    read_candidates,
    read_edges,
    write_candidates,
    write_edges,
)
from lexicon.io import ensure_dir
from relation import GateStats, gate_candidates, load_table_scorer
from retrieval import SearchParams, default_nprobe, generate_candidates, ivf_build, load_index, save_index

from .artifacts import (
    emit_clusters,
    read_final_clusters,
    read_hard_clusters,
    write_final_clusters,
    write_hard_clusters,
)
from .configs import PipelineConfig
from .manifest import PHASE_DEPENDENCIES, RunManifest
from .stats import compute_stats

PHASES = ("index", "candidates", "gate", "cluster", "parents", "emit", "stats")

ARTIFACTS = {
    "index": "index.lxivf",
    "candidates": "candidates.tsv",
    "gate": "edges.tsv",
    "cluster": "clusters.tsv",
    "parents": "final_clusters.tsv",
    "emit": "clusters.json",
    "stats": "stats.json",
}

SOFT_STATE_NAME = "soft_clusters.json"


def artifact_path(config: PipelineConfig, phase: str) -> str:
    return os.path.join(config.output_dir, ARTIFACTS[phase])


def _require_input(config: PipelineConfig, name: str):
    path = getattr(config, name)
    if path is None:
        raise FileNotFoundError(f"config does not name a {name} file")
    if not os.path.isfile(path):
        raise FileNotFoundError(f"{name} file {path} does not exist")
    return path


def _load_inputs(config: PipelineConfig):
    table = load_term_table(_require_input(config, "terms"))
    matrix = load_embeddings(_require_input(config, "embeddings"), expected_count=len(table))
    return table, matrix


def _run_index(config: PipelineConfig, output: str) -> Dict[str, int]:
    table, matrix = _load_inputs(config)
    index = ivf_build(matrix, nlist=config.nlist, seed=config.seed, iters=config.kmeans_iters, codec_range=config.codec_range)
    save_index(index, output)
    sizes = index.posting_sizes
    print_rank_0(f"    {index.count} vectors of dim {index.dim} in {index.nlist} cells, largest cell {max(sizes)}")
    return {"terms": len(table), "nlist": index.nlist}


def _run_candidates(config: PipelineConfig, output: str) -> Dict[str, int]:
    _, matrix = _load_inputs(config)
    index = load_index(artifact_path(config, "index"))
    nprobe = config.nprobe if config.nprobe is not None else default_nprobe(index.nlist)
    params = SearchParams(top_k=config.top_k, nprobe=nprobe, sim_threshold=config.sim_threshold)
    count = write_candidates(generate_candidates(index, matrix, params, workers=config.workers), output)
    print_rank_0(f"    {count} candidate pairs with cosine > {config.sim_threshold} (nprobe={nprobe})")
    return {"candidates": count}


def _run_gate(config: PipelineConfig, output: str) -> Dict[str, int]:
    table = load_term_table(_require_input(config, "terms"))
    scorer = load_table_scorer(
        _require_input(config, "scorer_table"), RelationLabel.parse(config.default_label), config.default_confidence
    )
    stats = GateStats()
    edges = gate_candidates(
        read_candidates(artifact_path(config, "candidates")),
        scorer,
        config.gate_config(),
        table,
        workers=config.workers,
        stats=stats,
    )
    count = write_edges(edges, output)
    print_rank_0(f"    {stats.kept} of {stats.scored} pairs kept, dropped: {dict(stats.dropped)}")
    return {"scored": stats.scored, "edges": count}


def _run_cluster(config: PipelineConfig, output: str) -> Dict[str, int]:
    edges = list(read_edges(artifact_path(config, "gate")))
    state, clusters = soft_to_hard(edges, config.cluster_config())
    check_disjoint(clusters)
    if config.dump_soft_state:
        table = load_term_table(_require_input(config, "terms"))
        with open(os.path.join(config.output_dir, SOFT_STATE_NAME), "w", encoding="utf-8") as file:
            json.dump(state.to_json(table), file, indent=2, ensure_ascii=False)
            file.write("\n")
    count = write_hard_clusters(clusters, output)
    polysemous = len(state.polysemous_terms())
    print_rank_0(f"    {len(state.clusters)} soft clusters, {polysemous} multi-member terms, {count} hard clusters")
    return {"soft_clusters": len(state.clusters), "multi_member_terms": polysemous, "clusters": count}


def _run_parents(config: PipelineConfig, output: str) -> Dict[str, int]:
    table, matrix = _load_inputs(config)
    if config.dictionary:
        dictionary = ParentDictionary.from_file(_require_input(config, "dictionary"))
    else:
        dictionary = ParentDictionary()
    clusters = [
        FinalCluster(cluster_id, members, select_parent(members, dictionary, matrix, table))
        for cluster_id, members in enumerate(read_hard_clusters(artifact_path(config, "cluster")))
    ]
    count = write_final_clusters(clusters, output)
    from_dictionary = sum(table[cluster.parent] in dictionary for cluster in clusters)
    print_rank_0(f"    {count} parents chosen, {from_dictionary} from the dictionary")
    return {"clusters": count, "dictionary_parents": from_dictionary}


def _run_emit(config: PipelineConfig, output: str) -> Dict[str, int]:
    table = load_term_table(_require_input(config, "terms"))
    count = emit_clusters(read_final_clusters(artifact_path(config, "parents")), table, output)
    return {"clusters": count}


def _run_stats(config: PipelineConfig, output: str) -> Dict[str, int]:
    table = load_term_table(_require_input(config, "terms"))
    stats = compute_stats(read_final_clusters(artifact_path(config, "parents")), len(table))
    with open(output, "w", encoding="utf-8") as file:
        json.dump(stats.as_dict(), file, indent=2)
        file.write("\n")
    print_rank_0(f"    {json.dumps(stats.as_dict())}")
    return {"clusters": stats.cluster_count, "unclustered_terms": stats.unclustered_term_count}


PHASE_RUNNERS = {
    "index": _run_index,
    "candidates": _run_candidates,
    "gate": _run_gate,
    "cluster": _run_cluster,
    "parents": _run_parents,
    "emit": _run_emit,
    "stats": _run_stats,
}


def run_phase(phase: str, config: PipelineConfig) -> Tuple[str, Dict[str, int]]:
    """
    Run one phase from its upstream artifact and record it in the run
    manifest. Returns the artifact path and its row counts.
    """
    if phase not in PHASE_RUNNERS:
        raise ValueError(f"unknown phase {phase!r}, expected one of {', '.join(PHASES)}")
    ensure_dir(config.output_dir)
    manifest = RunManifest(config)
    upstream = PHASE_DEPENDENCIES[phase][0]
    if upstream is not None:
        manifest.check_upstream(phase, artifact_path(config, upstream))

    start = time.time()
    print_rank_0(f"> Phase {phase}")
    output = artifact_path(config, phase)
    rows = PHASE_RUNNERS[phase](config, output)
    manifest.record(phase, output, rows)
    print_rank_0(f"> Finish phase {phase} in {time.time() - start:.1f}s, wrote {output}")
    return output, rows


def run_all(config: PipelineConfig) -> Dict[str, Dict[str, int]]:
    start = time.time()
    funnel = {}
    for phase in PHASES:
        _, funnel[phase] = run_phase(phase, config)
    print_rank_0(f"Finish {len(PHASES)} phases in {time.time() - start:.1f}s")
    return funnel
