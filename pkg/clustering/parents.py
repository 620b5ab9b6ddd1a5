import numpy as np

from typing import AbstractSet, Iterable

from lexicon import EmbeddingMatrix, TermTable, load_dictionary

TIE_TOLERANCE = 1e-9


class ParentDictionary:
    """Curated concept terms; exact string match."""

    def __init__(self, terms: Iterable[str] = ()):
        self.terms = frozenset(terms)

    @classmethod
    def from_file(cls, path) -> "ParentDictionary":
        return cls(load_dictionary(path))

    def __contains__(self, term: str) -> bool:
        return term in self.terms

    def __len__(self) -> int:
        return len(self.terms)


def compute_centroid(members: AbstractSet[int], matrix: EmbeddingMatrix) -> np.ndarray:
    """Unit-normalized mean of the (already unit) member embeddings."""
    if not members:
        raise ValueError("centroid of an empty member set")
    rows = matrix.rows(sorted(members)).astype(np.float64)
    mean = rows.mean(axis=0)
    norm = np.linalg.norm(mean)
    if norm < 1e-12:
        raise ValueError(f"zero-norm centroid for members {sorted(members)}")
    return mean / norm


def select_parent(
    cluster: AbstractSet[int], dictionary: ParentDictionary, matrix: EmbeddingMatrix, table: TermTable
) -> int:
    """
    Dictionary members win outright; among several, and in clusters without
    one, the member closest to the centroid wins, smallest TermId on ties.
    """
    if len(cluster) < 2:
        raise ValueError(f"parent selection needs at least 2 members, got {len(cluster)}")
    ids = sorted(cluster)
    rows = matrix.rows(ids).astype(np.float64)

    try:
        scores = rows @ compute_centroid(cluster, matrix)
    except ValueError:
        # members cancel out; fall back to total pairwise cosine
        scores = (rows @ rows.T).sum(axis=1)

    pool = [i for i, term_id in enumerate(ids) if table[term_id] in dictionary] or list(range(len(ids)))
    best = max(scores[i] for i in pool)
    return min(ids[i] for i in pool if scores[i] >= best - TIE_TOLERANCE)
