import json
import time

from glob import glob
from os.path import join, isdir, isfile, relpath
from typing import Dict, List

from clustering import ClusterConfig, soft_to_hard
from lexicon import print_rank_0

from .baseline import connected_components
from .configs import SyntheticSpec
from .metrics import ContaminationReport, evaluate
from .synthetic import generate_synthetic


class ContaminationTask:
    """Cluster one synthetic spec with the drift-aware algorithm and with connected components."""

    def __init__(self, spec: SyntheticSpec, config: ClusterConfig):
        self.spec = spec
        self.config = config

    def evaluate(self) -> ContaminationReport:
        start = time.time()
        corpus = generate_synthetic(self.spec)
        _, clusters = soft_to_hard(corpus.edges, self.config)
        report = evaluate(clusters, corpus.gold, baseline=connected_components(corpus.edges))

        print_rank_0(f"Evaluating spec {self.spec.name}:")
        print_rank_0(f"    {len(corpus.table)} terms, {len(corpus.edges)} edges")
        print_rank_0(
            f"    drift-cluster: {report.cluster_count} clusters, "
            f"cross-group {report.cross_group_cluster_fraction:.3f}, "
            f"polysemy {report.polysemy_resolution_accuracy:.3f}"
        )
        baseline = report.baseline_comparison
        print_rank_0(
            f"    connected components: {baseline.cluster_count} clusters, "
            f"cross-group {baseline.cross_group_cluster_fraction:.3f}, "
            f"polysemy {baseline.polysemy_resolution_accuracy:.3f}"
        )
        print_rank_0(f"Finish spec {self.spec.name} in {time.time() - start:.1f}s")
        return report


def find_all_specs(paths) -> List[str]:
    specs = []
    for path in paths:
        if isdir(path):
            specs += sorted(relpath(spec, ".") for spec in glob(join(path, "**/*.json"), recursive=True))
        elif isfile(path):
            specs.append(path)
        else:
            raise FileNotFoundError(f"spec path {path} does not exist")
    return specs


def evaluate_all_specs(paths, config: ClusterConfig, output=None) -> Dict[str, dict]:
    spec_paths = find_all_specs(paths)
    print_rank_0(f"> Found {len(spec_paths)} spec{'s' if len(spec_paths) != 1 else ''}")
    reports = {}
    for path in spec_paths:
        spec = SyntheticSpec.from_file(path)
        reports[spec.name] = ContaminationTask(spec, config).evaluate().as_dict()
    if output is not None:
        with open(output, "w", encoding="utf-8") as file:
            json.dump(reports, file, indent=2, ensure_ascii=False)
            file.write("\n")
        print_rank_0(f"> Reports written to {output}")
    return reports
