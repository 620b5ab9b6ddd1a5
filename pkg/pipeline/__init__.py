from .configs import PipelineConfig
from .manifest import RunManifest, PHASE_DEPENDENCIES
from .artifacts import (
    emit_clusters,
    clusters_to_json,
    read_final_clusters,
    write_final_clusters,
    read_hard_clusters,
    write_hard_clusters,
)
from .stats import ClusterStats, compute_stats
from .phases import PHASES, ARTIFACTS, artifact_path, run_phase, run_all
