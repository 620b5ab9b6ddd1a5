import numpy as np

from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as csgraph_components
from typing import Iterable, List

from lexicon import VerifiedEdge


def connected_components(edges: Iterable[VerifiedEdge]) -> List[frozenset]:
    """Transitive closure baseline: every connected term set, ordered by smallest TermId."""
    edges = list(edges)
    if not edges:
        return []
    terms = sorted({term for edge in edges for term in (edge.a, edge.b)})
    position = {term: i for i, term in enumerate(terms)}
    rows = np.array([position[edge.a] for edge in edges])
    cols = np.array([position[edge.b] for edge in edges])
    graph = coo_matrix((np.ones(len(edges)), (rows, cols)), shape=(len(terms), len(terms)))
    count, labels = csgraph_components(graph, directed=False)

    components = [set() for _ in range(count)]
    for term, label in zip(terms, labels):
        components[label].add(term)
    return sorted((frozenset(members) for members in components), key=min)
