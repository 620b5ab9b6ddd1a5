from __future__ import annotations

from dataclass_wizard import YAMLWizard
from dataclasses import dataclass, asdict
from enum import Enum
from os.path import dirname, isabs, join
from typing import Optional

from clustering import ClusterConfig, RatioComparator
from quantization import CodecRange
from relation import ConflictPolicy, GateConfig


@dataclass
class PipelineConfig(YAMLWizard):
    terms: str  # terms file, one term per line
    embeddings: str  # LXEMB1 embeddings file
    dictionary: Optional[str] = None  # parent dictionary, optional
    scorer_table: Optional[str] = None  # TableScorer TSV, required by the gate phase
    output_dir: str = "output"  # phase artifacts and the run manifest

    # candidate generation
    sim_threshold: float = 0.70
    top_k: int = 100
    nlist: Optional[int] = None  # defaults to ceil(4 * sqrt(count))
    nprobe: Optional[int] = None  # defaults to ceil(log2(nlist))
    seed: int = 0
    kmeans_iters: int = 20
    codec_range: CodecRange = CodecRange.PER_DIMENSION

    # relation gate
    synonym_confidence_threshold: float = 0.70
    conflict_policy: ConflictPolicy = ConflictPolicy.ANTONYM_CONFLICT
    default_label: str = "cohyponym"  # table scorer answer for absent pairs
    default_confidence: float = 0.50

    # clustering
    intersection_ratio_threshold: float = 0.51
    ratio_comparator: RatioComparator = RatioComparator.GT
    dump_soft_state: bool = False

    workers: int = 1

    def __post_init__(self):
        assert -1.0 <= self.sim_threshold <= 1.0, "sim_threshold must be in [-1, 1]"
        assert self.top_k >= 1, "top_k must be >= 1"
        assert self.nlist is None or self.nlist >= 1, "nlist must be >= 1"
        assert self.nprobe is None or self.nprobe >= 1, "nprobe must be >= 1"
        assert self.nlist is None or self.nprobe is None or self.nprobe <= self.nlist, "nprobe must not exceed nlist"
        assert self.kmeans_iters >= 1, "kmeans_iters must be >= 1"
        assert 0.0 <= self.synonym_confidence_threshold <= 1.0, "synonym confidence threshold must be in [0, 1]"
        assert 0.0 <= self.default_confidence <= 1.0, "default confidence must be in [0, 1]"
        assert 0.0 < self.intersection_ratio_threshold <= 1.0, "intersection ratio threshold must be in (0, 1]"
        assert self.workers >= 1, "workers must be >= 1"
        self.codec_range = CodecRange(self.codec_range)
        self.conflict_policy = ConflictPolicy(self.conflict_policy)
        self.ratio_comparator = RatioComparator(self.ratio_comparator)

    @classmethod
    def load(cls, path) -> "PipelineConfig":
        """Load a YAML config; relative paths inside it are taken from the config's directory."""
        config = cls.from_yaml_file(path)
        base = dirname(path)
        for name in ("terms", "embeddings", "dictionary", "scorer_table", "output_dir"):
            value = getattr(config, name)
            if value is not None and not isabs(value):
                setattr(config, name, join(base, value))
        return config

    def gate_config(self) -> GateConfig:
        return GateConfig(self.synonym_confidence_threshold, self.conflict_policy)

    def cluster_config(self) -> ClusterConfig:
        return ClusterConfig(self.intersection_ratio_threshold, self.ratio_comparator)

    def as_plain_dict(self):
        return {key: value.value if isinstance(value, Enum) else value for key, value in asdict(self).items()}
