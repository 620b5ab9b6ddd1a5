import pytest

from lexicon import RelationLabel, ScoredCandidate, TermTable, VerifiedEdge, read_edges, write_edges
from relation import (
    ConflictPolicy,
    GateConfig,
    GateStats,
    RelationScorer,
    TableScorer,
    check_symmetry,
    gate_candidates,
    load_table_scorer,
)

SYN, ANT, COH = RelationLabel.SYNONYM, RelationLabel.ANTONYM, RelationLabel.COHYPONYM

TABLE = TermTable(("araba", "otomobil", "kamyon", "oto", "sıcak", "soğuk"))


def gate(entries, candidates, policy=ConflictPolicy.ANTONYM_CONFLICT, threshold=0.70, workers=1, stats=None):
    scorer = TableScorer(entries)
    config = GateConfig(threshold, policy)
    return list(gate_candidates(candidates, scorer, config, TABLE, workers=workers, stats=stats))


@pytest.mark.parametrize("policy", list(ConflictPolicy))
def test_antonym_reverse_is_removed(policy):
    entries = {("araba", "kamyon"): (SYN, 0.9), ("kamyon", "araba"): (ANT, 0.8)}
    assert gate(entries, [ScoredCandidate(0, 2, 0.8)], policy) == []


@pytest.mark.parametrize("policy", list(ConflictPolicy))
def test_forward_confidence_at_or_below_threshold_is_removed(policy):
    entries = {
        ("araba", "otomobil"): (SYN, 0.65),
        ("otomobil", "araba"): (SYN, 0.95),
        ("araba", "oto"): (SYN, 0.70),
        ("oto", "araba"): (SYN, 0.95),
    }
    assert gate(entries, [ScoredCandidate(0, 1, 0.9), ScoredCandidate(0, 3, 0.9)], policy) == []


def test_both_synonym_keeps_minimum_confidence():
    entries = {("araba", "otomobil"): (SYN, 0.98), ("otomobil", "araba"): (SYN, 0.91)}
    assert gate(entries, [ScoredCandidate(0, 1, 0.9)]) == [VerifiedEdge(0, 1, 0.91)]


def test_cohyponym_reverse_depends_on_policy():
    entries = {("otomobil", "oto"): (SYN, 0.72), ("oto", "otomobil"): (COH, 0.60)}
    candidate = [ScoredCandidate(1, 3, 0.9)]
    assert gate(entries, candidate, ConflictPolicy.ANTONYM_CONFLICT) == [VerifiedEdge(1, 3, 0.72)]
    assert gate(entries, candidate, ConflictPolicy.STRICT) == []


def test_weak_synonym_reverse_keeps_forward_confidence():
    entries = {("araba", "oto"): (SYN, 0.90), ("oto", "araba"): (SYN, 0.55)}
    assert gate(entries, [ScoredCandidate(0, 3, 0.9)]) == [VerifiedEdge(0, 3, 0.90)]
    assert gate(entries, [ScoredCandidate(0, 3, 0.9)], ConflictPolicy.STRICT) == []


def test_absent_pairs_use_the_default_prediction():
    stats = GateStats()
    assert gate({}, [ScoredCandidate(4, 5, 0.8)], stats=stats) == []
    assert stats.scored == 1 and stats.kept == 0
    assert stats.dropped["forward-cohyponym"] == 1


def test_check_symmetry():
    fwd = (SYN, 0.9)
    assert check_symmetry(fwd, (COH, 0.9), ConflictPolicy.ANTONYM_CONFLICT)
    assert not check_symmetry(fwd, (ANT, 0.1), ConflictPolicy.ANTONYM_CONFLICT)
    assert not check_symmetry(fwd, (SYN, 0.70), ConflictPolicy.STRICT, threshold=0.70)
    assert check_symmetry(fwd, (SYN, 0.71), "strict-both-synonym", threshold=0.70)


def test_gate_is_idempotent():
    entries = {
        ("araba", "otomobil"): (SYN, 0.98),
        ("otomobil", "araba"): (SYN, 0.97),
        ("araba", "kamyon"): (SYN, 0.80),
        ("kamyon", "araba"): (ANT, 0.80),
    }
    candidates = [ScoredCandidate(0, 1, 0.9), ScoredCandidate(0, 2, 0.8)]
    once = gate(entries, candidates)
    twice = gate(entries, [ScoredCandidate(edge.a, edge.b, 1.0) for edge in once])
    assert [(e.a, e.b) for e in once] == [(e.a, e.b) for e in twice]


def test_output_order_matches_input_for_any_worker_count():
    entries = {}
    for a in range(len(TABLE)):
        for b in range(len(TABLE)):
            if a != b:
                entries[(TABLE[a], TABLE[b])] = (SYN, 0.80 + 0.01 * ((a + b) % 5))
    candidates = [ScoredCandidate(a, b, 0.9) for a in range(len(TABLE)) for b in range(a + 1, len(TABLE))]
    assert gate(entries, candidates, workers=1) == gate(entries, candidates, workers=3)


class BrokenScorer(RelationScorer):
    concurrent_safe = False

    def score(self, a, b):
        raise KeyError(a)


def test_scorer_failure_names_the_pair():
    with pytest.raises(RuntimeError, match="pair \\(0, 1\\)"):
        list(gate_candidates([ScoredCandidate(0, 1, 0.9)], BrokenScorer(), GateConfig(), TABLE, workers=4))


def test_load_table_scorer(tmp_path):
    path = tmp_path / "scorer.tsv"
    path.write_text(
        "term_a\tterm_b\tlabel\tconfidence\naraba\totomobil\tsynonym\t0.98\notomobil\taraba\tSynonym\t0.97\n",
        encoding="utf-8",
    )
    scorer = load_table_scorer(path)
    assert scorer.score("araba", "otomobil") == (SYN, 0.98)
    assert scorer.score("araba", "kamyon") == (COH, 0.50)


def test_load_table_scorer_rejects_repeats(tmp_path):
    path = tmp_path / "scorer.tsv"
    path.write_text(
        "term_a\tterm_b\tlabel\tconfidence\na\tb\tsynonym\t0.9\na\tb\tantonym\t0.9\n",
        encoding="utf-8",
    )
    with pytest.raises(ValueError, match="line 3"):
        load_table_scorer(path)


def test_edges_above_threshold_survive_the_edge_file(tmp_path):
    entries = {("araba", "oto"): (SYN, 0.7000004), ("oto", "araba"): (SYN, 0.9)}
    edges = gate(entries, [ScoredCandidate(0, 3, 0.9)])
    assert edges == [VerifiedEdge(0, 3, 0.7000004)]

    write_edges(edges, tmp_path / "edges.tsv")
    assert all(edge.confidence > 0.70 for edge in read_edges(tmp_path / "edges.tsv"))
