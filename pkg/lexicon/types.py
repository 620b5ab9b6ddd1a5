from __future__ import annotations

import numpy as np

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

NORM_TOLERANCE = 1e-4


class RelationLabel(IntEnum):
    ANTONYM = 0
    COHYPONYM = 1
    SYNONYM = 2

    @classmethod
    def parse(cls, name: str) -> "RelationLabel":
        key = name.strip().lower().replace("-", "").replace("_", "")
        for label in cls:
            if label.name.lower() == key:
                return label
        raise ValueError(f"unknown relation label {name!r}")

    @property
    def tsv_name(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class TermTable:
    """Ordered, duplicate-free term universe; the index of a term is its TermId."""

    terms: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        index = {}
        for term_id, term in enumerate(self.terms):
            if not term:
                raise ValueError(f"empty term at id {term_id}")
            if term in index:
                raise ValueError(f"duplicate term {term!r} at ids {index[term]} and {term_id}")
            index[term] = term_id
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, term_id: int) -> str:
        if not 0 <= term_id < len(self.terms):
            raise IndexError(f"term id {term_id} out of range for table of size {len(self.terms)}")
        return self.terms[term_id]

    def __contains__(self, term: str) -> bool:
        return term in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.terms)

    def id_of(self, term: str) -> int:
        try:
            return self._index[term]
        except KeyError:
            raise KeyError(f"term {term!r} not in table") from None


class EmbeddingMatrix:
    """Row-major float32 matrix whose rows are unit-normalized at construction."""

    def __init__(self, data: np.ndarray):
        data = np.array(data, dtype=np.float32, copy=True)
        if data.ndim != 2:
            raise ValueError(f"embedding matrix must be 2-dimensional, got shape {data.shape}")
        norms = np.linalg.norm(data.astype(np.float64), axis=1)
        zero_rows = np.flatnonzero(norms == 0.0)
        if len(zero_rows):
            raise ValueError(f"zero-norm embedding at row {int(zero_rows[0])}")
        data = (data / norms[:, None]).astype(np.float32)
        data.flags.writeable = False
        self.data = data

    @property
    def count(self) -> int:
        return self.data.shape[0]

    @property
    def dim(self) -> int:
        return self.data.shape[1]

    def row(self, term_id: int) -> np.ndarray:
        if not 0 <= term_id < self.count:
            raise IndexError(f"missing embedding row for term id {term_id} (matrix has {self.count} rows)")
        return self.data[term_id]

    def rows(self, term_ids: Sequence[int]) -> np.ndarray:
        for term_id in term_ids:
            if not 0 <= term_id < self.count:
                raise IndexError(f"missing embedding row for term id {term_id} (matrix has {self.count} rows)")
        return self.data[np.asarray(term_ids, dtype=np.int64)]


@dataclass(frozen=True, order=True)
class ScoredCandidate:
    a: int
    b: int
    cosine: float

    def __post_init__(self):
        assert self.a != self.b, f"self-pair ({self.a}, {self.b})"


@dataclass(frozen=True, order=True)
class VerifiedEdge:
    a: int
    b: int
    confidence: float

    def __post_init__(self):
        assert self.a != self.b, f"self-loop edge ({self.a}, {self.b})"
        assert 0.0 <= self.confidence <= 1.0, f"confidence {self.confidence} outside [0, 1]"


@dataclass(frozen=True)
class FinalCluster:
    cluster_id: int
    members: FrozenSet[int]
    parent: int

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        assert len(self.members) >= 2, f"cluster {self.cluster_id} has fewer than 2 members"
        assert self.parent in self.members, f"parent {self.parent} not a member of cluster {self.cluster_id}"

    @property
    def sorted_members(self) -> List[int]:
        return sorted(self.members)


def canonical_pair(a: int, b: int) -> Tuple[int, int]:
    return (a, b) if a < b else (b, a)


def check_disjoint(member_sets: Iterable[Iterable[int]]):
    seen = {}
    for cluster_id, members in enumerate(member_sets):
        for term_id in members:
            if term_id in seen:
                raise ValueError(f"term {term_id} appears in clusters {seen[term_id]} and {cluster_id}")
            seen[term_id] = cluster_id
