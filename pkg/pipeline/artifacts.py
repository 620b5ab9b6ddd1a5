import json

from typing import Iterable, Iterator, List, Sequence

from lexicon import FinalCluster, TermTable
from lexicon.io import read_tsv

CLUSTER_HEADER = ("cluster_id", "members")
FINAL_CLUSTER_HEADER = ("cluster_id", "parent_id", "members")


def _join_ids(ids: Iterable[int]) -> str:
    return ",".join(str(term_id) for term_id in sorted(ids))


def _split_ids(text: str) -> List[int]:
    return [int(term_id) for term_id in text.split(",")]


def write_hard_clusters(clusters: Sequence[frozenset], path) -> int:
    with open(path, "w", encoding="utf-8") as file:
        file.write("\t".join(CLUSTER_HEADER) + "\n")
        for cluster_id, members in enumerate(clusters):
            file.write(f"{cluster_id}\t{_join_ids(members)}\n")
    return len(clusters)


def read_hard_clusters(path) -> List[frozenset]:
    clusters = []
    for cluster_id, members in read_tsv(path, CLUSTER_HEADER):
        if int(cluster_id) != len(clusters):
            raise ValueError(f"{path}: cluster ids must be dense, got {cluster_id} after {len(clusters) - 1}")
        clusters.append(frozenset(_split_ids(members)))
    return clusters


def write_final_clusters(clusters: Iterable[FinalCluster], path) -> int:
    count = 0
    with open(path, "w", encoding="utf-8") as file:
        file.write("\t".join(FINAL_CLUSTER_HEADER) + "\n")
        for cluster in clusters:
            file.write(f"{cluster.cluster_id}\t{cluster.parent}\t{_join_ids(cluster.members)}\n")
            count += 1
    return count


def read_final_clusters(path) -> Iterator[FinalCluster]:
    for cluster_id, parent, members in read_tsv(path, FINAL_CLUSTER_HEADER):
        yield FinalCluster(int(cluster_id), frozenset(_split_ids(members)), int(parent))


def clusters_to_json(clusters: Iterable[FinalCluster], table: TermTable) -> list:
    return [
        {
            "cluster_id": cluster.cluster_id,
            "parent": table[cluster.parent],
            "members": [table[term_id] for term_id in cluster.sorted_members],
        }
        for cluster in sorted(clusters, key=lambda cluster: cluster.cluster_id)
    ]


def emit_clusters(clusters: Iterable[FinalCluster], table: TermTable, path) -> int:
    """Write the JSON deliverable: clusters by id, members by TermId, UTF-8 without escaping."""
    payload = clusters_to_json(clusters, table)
    with open(path, "w", encoding="utf-8") as file:
        json.dump(payload, file, indent=2, ensure_ascii=False)
        file.write("\n")
    return len(payload)
