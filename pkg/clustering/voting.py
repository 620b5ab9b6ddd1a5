from typing import Iterable, List, Sequence, Tuple

from .adjacency import AdjacencyMap
from .expansion import SoftClusterState


def vote(t: int, candidates: Sequence[Tuple[int, Iterable[int]]], adj: AdjacencyMap) -> int:
    """
    Topological vote for a multi-member term:
      1. most shared synonyms with the cluster (t itself not counted)
      2. smaller cluster
      3. smaller cluster id
    """
    if not candidates:
        raise ValueError(f"term {t} has no candidate clusters to vote on")
    synonyms = adj.synonyms(t)

    def rank(candidate):
        cluster_id, members = candidate
        members = set(members)
        return -len(synonyms & (members - {t})), len(members), cluster_id

    return min(candidates, key=rank)[0]


def reduce(state: SoftClusterState, adj: AdjacencyMap) -> List[frozenset]:
    """
    Resolve soft memberships into a hard partition. Votes are taken against the
    soft state as built, then applied; clusters left with fewer than two
    members are dissolved. Surviving clusters keep creation order.
    """
    winners = {
        term: vote(term, [(cluster_id, state.clusters[cluster_id]) for cluster_id in sorted(state.membership[term])], adj)
        for term in state.polysemous_terms()
    }

    clusters = [set(members) for members in state.clusters]
    for term, winner in winners.items():
        for cluster_id in state.membership[term]:
            if cluster_id != winner:
                clusters[cluster_id].discard(term)

    return [frozenset(members) for members in clusters if len(members) >= 2]
