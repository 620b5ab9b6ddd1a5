from __future__ import annotations
from dataclass_wizard import JSONWizard
from dataclasses import dataclass, field
from typing import Optional, List

INTRA_CONFIDENCE = (0.85, 0.99)  # intra-group and polysemy edges
BRIDGE_CONFIDENCE = (0.71, 0.75)  # chain links, above the 0.70 gate


@dataclass
class ConceptGroup:
    terms: List[str]
    density: float = 1.0  # share of the group's term pairs that become edges

    def __post_init__(self):
        assert len(self.terms) >= 2, "a concept group needs at least 2 terms"
        assert len(set(self.terms)) == len(self.terms), f"repeated term in group {self.terms}"
        assert 0.0 < self.density <= 1.0, "density must be in (0, 1]"


@dataclass
class ChainLink:
    source: int  # group index
    target: int  # group index
    source_term: Optional[str] = None  # defaults to the last term of the source group
    target_term: Optional[str] = None  # defaults to the first term of the target group


@dataclass
class Wire:
    group: int
    count: int  # wired to the first `count` terms of the group


@dataclass
class PolysemyTerm:
    term: str
    wires: List[Wire]


@dataclass
class SyntheticSpec(JSONWizard):
    name: str
    concept_groups: List[ConceptGroup]
    chain_links: List[ChainLink] = field(default_factory=list)
    polysemy_terms: List[PolysemyTerm] = field(default_factory=list)
    seed: int = 0

    def __post_init__(self):
        owner = {}
        for index, group in enumerate(self.concept_groups):
            for term in group.terms:
                if term in owner:
                    raise ValueError(f"{self.name}: term {term!r} appears in groups {owner[term]} and {index}")
                owner[term] = index

        for link in self.chain_links:
            for end in (link.source, link.target):
                if not 0 <= end < len(self.concept_groups):
                    raise ValueError(f"{self.name}: chain link references unknown group {end}")
            if link.source == link.target:
                raise ValueError(f"{self.name}: chain link must connect distinct groups, got {link.source} twice")
            for term, group in ((link.source_term, link.source), (link.target_term, link.target)):
                if term is not None and owner.get(term) != group:
                    raise ValueError(f"{self.name}: chain link endpoint {term!r} is not in group {group}")

        seen = set()
        for polysemy in self.polysemy_terms:
            if polysemy.term in owner or polysemy.term in seen:
                raise ValueError(f"{self.name}: polysemy term {polysemy.term!r} is already declared")
            seen.add(polysemy.term)
            groups = [wire.group for wire in polysemy.wires]
            if len(set(groups)) < 2 or len(set(groups)) != len(groups):
                raise ValueError(f"{self.name}: polysemy term {polysemy.term!r} must be wired into 2 or more distinct groups")
            for wire in polysemy.wires:
                if not 0 <= wire.group < len(self.concept_groups):
                    raise ValueError(f"{self.name}: polysemy term {polysemy.term!r} wired to unknown group {wire.group}")
                if not 1 <= wire.count <= len(self.concept_groups[wire.group].terms):
                    raise ValueError(
                        f"{self.name}: polysemy term {polysemy.term!r} wires {wire.count} terms of group {wire.group}"
                    )

    @classmethod
    def from_file(cls, path) -> "SyntheticSpec":
        with open(path, "r", encoding="utf-8") as file:
            return cls.from_json(file.read())
