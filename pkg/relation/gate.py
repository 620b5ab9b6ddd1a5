from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from multiprocessing import Pool
from typing import Iterable, Iterator, List, Optional, Tuple

import tqdm

from lexicon import RelationLabel, ScoredCandidate, VerifiedEdge, TermTable, is_rank_0

from .scorer import RelationScorer, Prediction

GATE_CHUNK = 1024


class ConflictPolicy(Enum):
    ANTONYM_CONFLICT = "paper-literal"
    STRICT = "strict-both-synonym"


@dataclass
class GateConfig:
    synonym_confidence_threshold: float = 0.70
    conflict_policy: ConflictPolicy = ConflictPolicy.ANTONYM_CONFLICT

    def __post_init__(self):
        assert 0.0 <= self.synonym_confidence_threshold <= 1.0, "synonym confidence threshold must be in [0, 1]"
        self.conflict_policy = ConflictPolicy(self.conflict_policy)


@dataclass
class GateStats:
    scored: int = 0
    kept: int = 0
    dropped: Counter = field(default_factory=Counter)

    def as_dict(self):
        return {"scored": self.scored, "kept": self.kept, "dropped": dict(sorted(self.dropped.items()))}


def score_pair(scorer: RelationScorer, a: int, b: int, table: TermTable) -> Prediction:
    term_a, term_b = table[a], table[b]
    try:
        label, confidence = scorer.score(term_a, term_b)
    except Exception as e:
        raise RuntimeError(f"scorer failed on pair ({a}, {b}) = ({term_a!r}, {term_b!r})") from e
    return RelationLabel(label), float(confidence)


def is_confident_synonym(prediction: Prediction, threshold: float) -> bool:
    label, confidence = prediction
    return label == RelationLabel.SYNONYM and confidence > threshold


def check_symmetry(fwd: Prediction, rev: Prediction, policy: ConflictPolicy, threshold: float = 0.70) -> bool:
    """
    Decide whether a pair whose forward direction already passed the synonym
    filter survives its reverse prediction. Returns True to keep.
    """
    policy = ConflictPolicy(policy)
    if policy == ConflictPolicy.STRICT:
        return is_confident_synonym(rev, threshold)
    return rev[0] != RelationLabel.ANTONYM


def _judge(candidate, scorer: RelationScorer, config: GateConfig, table: TermTable) -> Tuple[Optional[VerifiedEdge], str]:
    threshold = config.synonym_confidence_threshold
    fwd = score_pair(scorer, candidate.a, candidate.b, table)
    if fwd[0] != RelationLabel.SYNONYM:
        return None, f"forward-{fwd[0].tsv_name}"
    if fwd[1] <= threshold:
        return None, "forward-low-confidence"
    rev = score_pair(scorer, candidate.b, candidate.a, table)
    if not check_symmetry(fwd, rev, config.conflict_policy, threshold):
        return None, f"reverse-{rev[0].tsv_name}" if rev[0] != RelationLabel.SYNONYM else "reverse-low-confidence"
    confidence = min(fwd[1], rev[1]) if is_confident_synonym(rev, threshold) else fwd[1]
    return VerifiedEdge(candidate.a, candidate.b, confidence), "kept"


_worker_state = {}


def _init_worker(scorer, config, table):
    _worker_state.update(scorer=scorer, config=config, table=table)


def _judge_chunk(chunk: List[ScoredCandidate]):
    return [_judge(candidate, _worker_state["scorer"], _worker_state["config"], _worker_state["table"]) for candidate in chunk]


def _chunked(candidates: Iterable, size: int) -> Iterator[List]:
    chunk = []
    for candidate in candidates:
        chunk.append(candidate)
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def gate_candidates(
    candidates: Iterable[ScoredCandidate],
    scorer: RelationScorer,
    config: GateConfig,
    table: TermTable,
    workers: int = 1,
    stats: Optional[GateStats] = None,
) -> Iterator[VerifiedEdge]:
    """
    Keep pairs whose forward prediction is Synonym above the threshold and
    whose reverse prediction passes the conflict policy. Output order equals
    input order, so canonical input gives canonical output.
    """
    stats = stats if stats is not None else GateStats()
    if not scorer.concurrent_safe:
        workers = 1

    chunks = _chunked(candidates, GATE_CHUNK)
    progress = dict(desc="gate", unit="chunk", disable=not is_rank_0())
    if workers > 1:
        pool = Pool(workers, initializer=_init_worker, initargs=(scorer, config, table))
        judged = pool.imap(_judge_chunk, chunks)
    else:
        pool = None
        _init_worker(scorer, config, table)
        judged = map(_judge_chunk, chunks)

    try:
        for results in tqdm.tqdm(judged, **progress):
            for edge, reason in results:
                stats.scored += 1
                if edge is None:
                    stats.dropped[reason] += 1
                    continue
                stats.kept += 1
                yield edge
    finally:
        if pool is not None:
            pool.terminate()