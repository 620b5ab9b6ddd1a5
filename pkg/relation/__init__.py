from .scorer import RelationScorer, TableScorer, load_table_scorer, Prediction, SCORER_HEADER
from .gate import ConflictPolicy, GateConfig, GateStats, score_pair, check_symmetry, gate_candidates
