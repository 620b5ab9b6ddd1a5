from .configs import SyntheticSpec, ConceptGroup, ChainLink, PolysemyTerm, Wire
from .synthetic import GoldLabels, SyntheticCorpus, generate_synthetic, group_pairs
from .baseline import connected_components
from .metrics import ClusterMetrics, ContaminationReport, evaluate, cluster_metrics
from .tasks import ContaminationTask, find_all_specs, evaluate_all_specs
