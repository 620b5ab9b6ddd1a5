from abc import ABC, abstractmethod
from typing import Dict, Tuple

from lexicon import RelationLabel

SCORER_HEADER = ("term_a", "term_b", "label", "confidence")

Prediction = Tuple[RelationLabel, float]


class RelationScorer(ABC):
    """
    Order-sensitive three-way relation classifier over term strings.
    score(a, b) and score(b, a) may differ; the result must be deterministic.
    """

    # Scorers that cannot be copied into worker processes set this to False.
    concurrent_safe: bool = True

    @abstractmethod
    def score(self, a: str, b: str) -> Prediction:
        pass


class TableScorer(RelationScorer):
    def __init__(
        self,
        entries: Dict[Tuple[str, str], Prediction],
        default_label: RelationLabel = RelationLabel.COHYPONYM,
        default_confidence: float = 0.50,
    ):
        for pair, (label, confidence) in entries.items():
            assert 0.0 <= confidence <= 1.0, f"confidence {confidence} for {pair} outside [0, 1]"
        assert 0.0 <= default_confidence <= 1.0, "default confidence outside [0, 1]"
        self.entries = {pair: (RelationLabel(label), float(confidence)) for pair, (label, confidence) in entries.items()}
        self.default = (RelationLabel(default_label), float(default_confidence))

    def score(self, a: str, b: str) -> Prediction:
        return self.entries.get((a, b), self.default)

    def __len__(self):
        return len(self.entries)


def load_table_scorer(
    path, default_label: RelationLabel = RelationLabel.COHYPONYM, default_confidence: float = 0.50
) -> TableScorer:
    entries = {}
    with open(path, "r", encoding="utf-8") as file:
        header = file.readline().rstrip("\n")
        if tuple(header.split("\t")) != SCORER_HEADER:
            raise ValueError(f"{path}: expected header {' '.join(SCORER_HEADER)!r}, got {header!r}")
        for lineno, line in enumerate(file, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 4:
                raise ValueError(f"{path}: line {lineno} has {len(fields)} columns, expected 4")
            term_a, term_b, label, confidence = fields
            if (term_a, term_b) in entries:
                raise ValueError(f"{path}: line {lineno} repeats the ordered pair ({term_a!r}, {term_b!r})")
            try:
                entries[(term_a, term_b)] = (RelationLabel.parse(label), float(confidence))
            except ValueError as e:
                raise ValueError(f"{path}: line {lineno}: {e}") from e
    return TableScorer(entries, default_label, default_confidence)
