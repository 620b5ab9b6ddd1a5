from .adjacency import AdjacencyMap, build_adjacency
from .expansion import RatioComparator, ClusterConfig, SoftClusterState, intersection_ratio, expand
from .voting import vote, reduce
from .parents import ParentDictionary, compute_centroid, select_parent


def soft_to_hard(edges, config: ClusterConfig):
    """Expansion followed by voting; returns (soft state, hard member sets in creation order)."""
    edges = list(edges)
    adj = build_adjacency(edges)
    state = expand(edges, adj, config)
    return state, reduce(state, adj)
