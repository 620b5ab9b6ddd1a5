from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Set

from lexicon import VerifiedEdge, TermTable, canonical_pair

from .adjacency import AdjacencyMap


class RatioComparator(Enum):
    GT = "gt"
    GE = "ge"


@dataclass
class ClusterConfig:
    intersection_ratio_threshold: float = 0.51
    ratio_comparator: RatioComparator = RatioComparator.GT

    def __post_init__(self):
        assert 0.0 < self.intersection_ratio_threshold <= 1.0, "intersection ratio threshold must be in (0, 1]"
        self.ratio_comparator = RatioComparator(self.ratio_comparator)

    def joins(self, ratio: float) -> bool:
        if self.ratio_comparator == RatioComparator.GE:
            return ratio >= self.intersection_ratio_threshold
        return ratio > self.intersection_ratio_threshold


class SoftClusterState:
    """
    Overlapping clusters in creation order; membership[t] holds the ids of
    every cluster containing t.
    """

    def __init__(self):
        self.clusters: List[Set[int]] = []
        self.membership: Dict[int, Set[int]] = {}

    def create(self, u: int, v: int) -> int:
        cluster_id = len(self.clusters)
        self.clusters.append({u, v})
        self.membership.setdefault(u, set()).add(cluster_id)
        self.membership.setdefault(v, set()).add(cluster_id)
        return cluster_id

    def add(self, term: int, cluster_id: int):
        self.clusters[cluster_id].add(term)
        self.membership.setdefault(term, set()).add(cluster_id)

    def memberships(self, term: int) -> FrozenSet[int]:
        return frozenset(self.membership.get(term, ()))

    def polysemous_terms(self) -> List[int]:
        return sorted(term for term, clusters in self.membership.items() if len(clusters) > 1)

    def to_json(self, table: TermTable = None):
        name = (lambda term: table[term]) if table is not None else (lambda term: term)
        return {
            "clusters": [
                {"cluster_id": cluster_id, "members": [name(term) for term in sorted(members)]}
                for cluster_id, members in enumerate(self.clusters)
            ],
            "multi_members": [
                {"term": name(term), "cluster_ids": sorted(self.membership[term])} for term in self.polysemous_terms()
            ],
        }


def intersection_ratio(t: int, members: Iterable[int], adj: AdjacencyMap) -> float:
    """|synonyms(t) ∩ members(C)| / |members(C)|"""
    members = members if isinstance(members, (set, frozenset)) else set(members)
    if not members:
        raise ValueError("intersection ratio is undefined for an empty cluster")
    return len(adj.synonyms(t) & members) / len(members)


def edge_order(edge: VerifiedEdge):
    a, b = canonical_pair(edge.a, edge.b)
    return -edge.confidence, a, b


def expand(edges: Iterable[VerifiedEdge], adj: AdjacencyMap, config: ClusterConfig) -> SoftClusterState:
    """
    Walk pairs by descending confidence. Two unassigned endpoints seed a new
    cluster; otherwise each endpoint is offered every cluster of its partner
    (memberships read before the pair is processed) and joins when its
    intersection ratio passes the threshold.
    """
    state = SoftClusterState()
    for edge in sorted(edges, key=edge_order):
        u, v = canonical_pair(edge.a, edge.b)
        u_clusters, v_clusters = state.memberships(u), state.memberships(v)
        if not u_clusters and not v_clusters:
            state.create(u, v)
            continue
        for term, offered in ((u, v_clusters), (v, u_clusters)):
            for cluster_id in sorted(offered):
                if cluster_id in state.membership.get(term, ()):
                    continue
                if config.joins(intersection_ratio(term, state.clusters[cluster_id], adj)):
                    state.add(term, cluster_id)
    return state
