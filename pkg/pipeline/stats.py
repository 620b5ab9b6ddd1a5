from dataclasses import dataclass, asdict
from typing import AbstractSet, Iterable, Optional, Union

from lexicon import FinalCluster


@dataclass(frozen=True)
class ClusterStats:
    cluster_count: int
    median_size: int
    mean_size: float
    max_size: int
    unclustered_term_count: Optional[int]
    median_rule: str = "lower"

    def as_dict(self):
        return asdict(self)


def compute_stats(
    clusters: Iterable[Union[FinalCluster, AbstractSet[int]]], term_count: Optional[int] = None
) -> ClusterStats:
    """
    Size statistics over final clusters. The median of an even number of
    sizes is the lower middle value; the mean is rounded to 2 decimals.
    """
    member_sets = [cluster.members if isinstance(cluster, FinalCluster) else frozenset(cluster) for cluster in clusters]
    clustered = set().union(*member_sets) if member_sets else set()
    if term_count is not None and len(clustered) > term_count:
        raise ValueError(f"{len(clustered)} clustered terms exceed the table size {term_count}")

    sizes = sorted(len(members) for members in member_sets)
    if not sizes:
        return ClusterStats(0, 0, 0.0, 0, term_count)
    return ClusterStats(
        cluster_count=len(sizes),
        median_size=sizes[(len(sizes) - 1) // 2],
        mean_size=round(sum(sizes) / len(sizes), 2),
        max_size=sizes[-1],
        unclustered_term_count=term_count - len(clustered) if term_count is not None else None,
    )
