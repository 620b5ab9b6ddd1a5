import math
import itertools

import numpy as np

from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from lexicon import TermTable, VerifiedEdge, canonical_pair

from .configs import SyntheticSpec, ConceptGroup, INTRA_CONFIDENCE, BRIDGE_CONFIDENCE


@dataclass(frozen=True)
class GoldLabels:
    groups: Dict[int, int]  # TermId -> gold group index
    polysemy: FrozenSet[int]  # TermIds of the declared polysemy terms


@dataclass(frozen=True)
class SyntheticCorpus:
    table: TermTable
    edges: List[VerifiedEdge]
    gold: GoldLabels


def group_pairs(group: ConceptGroup) -> List[Tuple[int, int]]:
    """
    Positional pairs kept for a group: the path (0,1), (1,2), ... first, then
    the remaining pairs in lexicographic order, cut at ceil(density * C(n, 2)).
    """
    size = len(group.terms)
    path = [(i, i + 1) for i in range(size - 1)]
    rest = [pair for pair in itertools.combinations(range(size), 2) if pair[1] != pair[0] + 1]
    keep = math.ceil(group.density * size * (size - 1) / 2 - 1e-9)
    return (path + rest)[:keep]


def majority_group(wires) -> int:
    counts = Counter()
    for wire in wires:
        counts[wire.group] += wire.count
    return min(counts, key=lambda group: (-counts[group], group))


def generate_synthetic(spec: SyntheticSpec) -> SyntheticCorpus:
    """
    Build a gated edge list with planted structure. Topology depends on the
    spec alone; the seed only draws confidences.
    """
    rng = np.random.default_rng(spec.seed)
    terms = [term for group in spec.concept_groups for term in group.terms]
    terms += [polysemy.term for polysemy in spec.polysemy_terms]
    table = TermTable(tuple(terms))

    def draw(band):
        return round(float(rng.uniform(*band)), 6)

    edges: Dict[Tuple[int, int], float] = {}

    def connect(a: str, b: str, band):
        pair = canonical_pair(table.id_of(a), table.id_of(b))
        confidence = draw(band)
        edges.setdefault(pair, confidence)

    for group in spec.concept_groups:
        for i, j in group_pairs(group):
            connect(group.terms[i], group.terms[j], INTRA_CONFIDENCE)
    for link in spec.chain_links:
        source = link.source_term or spec.concept_groups[link.source].terms[-1]
        target = link.target_term or spec.concept_groups[link.target].terms[0]
        connect(source, target, BRIDGE_CONFIDENCE)
    for polysemy in spec.polysemy_terms:
        for wire in polysemy.wires:
            for term in spec.concept_groups[wire.group].terms[: wire.count]:
                connect(polysemy.term, term, INTRA_CONFIDENCE)

    groups = {table.id_of(term): index for index, group in enumerate(spec.concept_groups) for term in group.terms}
    for polysemy in spec.polysemy_terms:
        groups[table.id_of(polysemy.term)] = majority_group(polysemy.wires)
    gold = GoldLabels(groups, frozenset(table.id_of(polysemy.term) for polysemy in spec.polysemy_terms))

    return SyntheticCorpus(table, [VerifiedEdge(a, b, edges[(a, b)]) for a, b in sorted(edges)], gold)
