from collections import defaultdict
from typing import Dict, FrozenSet, Iterable, Iterator, Set

from lexicon import VerifiedEdge

EMPTY = frozenset()


class AdjacencyMap:
    """Symmetric synonym neighborhoods built from verified edges; no self-loops."""

    def __init__(self, neighbors: Dict[int, Set[int]] = None):
        self._neighbors: Dict[int, FrozenSet[int]] = {
            term: frozenset(terms) for term, terms in (neighbors or {}).items() if terms
        }

    def synonyms(self, term: int) -> FrozenSet[int]:
        return self._neighbors.get(term, EMPTY)

    def degree(self, term: int) -> int:
        return len(self.synonyms(term))

    def terms(self) -> Iterator[int]:
        return iter(sorted(self._neighbors))

    def __contains__(self, term: int) -> bool:
        return term in self._neighbors

    def __len__(self) -> int:
        return len(self._neighbors)


def build_adjacency(edges: Iterable[VerifiedEdge]) -> AdjacencyMap:
    neighbors = defaultdict(set)
    for edge in edges:
        if edge.a == edge.b:
            raise ValueError(f"self-loop edge on term {edge.a}")
        neighbors[edge.a].add(edge.b)
        neighbors[edge.b].add(edge.a)
    return AdjacencyMap(neighbors)
