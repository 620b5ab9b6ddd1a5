from collections import Counter
from dataclasses import dataclass, asdict
from typing import AbstractSet, Optional, Sequence

from lexicon import check_disjoint

from .synthetic import GoldLabels

OPERATIONALIZATION_NOTE = (
    "contamination metrics are an operationalization of semantic drift on planted structure, "
    "not a measure reported for the production lexicon"
)


@dataclass(frozen=True)
class ClusterMetrics:
    cluster_count: int
    cross_group_cluster_fraction: float
    polysemy_resolution_accuracy: float


@dataclass(frozen=True)
class ContaminationReport:
    cluster_count: int
    cross_group_cluster_fraction: float
    polysemy_resolution_accuracy: float
    baseline_comparison: Optional[ClusterMetrics] = None
    note: str = OPERATIONALIZATION_NOTE

    def as_dict(self):
        return asdict(self)


def cross_group_cluster_fraction(clusters: Sequence[AbstractSet[int]], gold: GoldLabels) -> float:
    if not clusters:
        return 0.0
    mixed = sum(len({gold.groups[term] for term in members}) > 1 for members in clusters)
    return mixed / len(clusters)


def polysemy_resolution_accuracy(clusters: Sequence[AbstractSet[int]], gold: GoldLabels) -> float:
    """
    A polysemy term is resolved when it sits in a cluster whose other members
    mostly belong to its majority-wired group. Vacuously 1.0 without polysemy terms.
    """
    if not gold.polysemy:
        return 1.0
    home = {term: members for members in clusters for term in members}
    resolved = 0
    for term in gold.polysemy:
        others = Counter(gold.groups[other] for other in home.get(term, ()) if other != term)
        if others and min(others, key=lambda group: (-others[group], group)) == gold.groups[term]:
            resolved += 1
    return resolved / len(gold.polysemy)


def cluster_metrics(clusters: Sequence[AbstractSet[int]], gold: GoldLabels) -> ClusterMetrics:
    check_disjoint(clusters)
    return ClusterMetrics(
        cluster_count=len(clusters),
        cross_group_cluster_fraction=cross_group_cluster_fraction(clusters, gold),
        polysemy_resolution_accuracy=polysemy_resolution_accuracy(clusters, gold),
    )


def evaluate(
    clusters: Sequence[AbstractSet[int]], gold: GoldLabels, baseline: Optional[Sequence[AbstractSet[int]]] = None
) -> ContaminationReport:
    metrics = cluster_metrics(clusters, gold)
    return ContaminationReport(
        cluster_count=metrics.cluster_count,
        cross_group_cluster_fraction=metrics.cross_group_cluster_fraction,
        polysemy_resolution_accuracy=metrics.polysemy_resolution_accuracy,
        baseline_comparison=cluster_metrics(baseline, gold) if baseline is not None else None,
    )
