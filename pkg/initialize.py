import argparse

from clustering import ClusterConfig, RatioComparator
from pipeline import PipelineConfig
from quantization import CodecRange
from relation import ConflictPolicy


def add_input_args(parser):
    group = parser.add_argument_group("Input", "Pipeline config and output location")

    group.add_argument("--config", type=str, default=None, help="YAML pipeline config")
    group.add_argument("--output-dir", type=str, default=None, help="Directory for phase artifacts and the manifest")
    group.add_argument("--workers", type=int, default=None, help="Worker processes for candidate generation and gating")
    return parser


def add_retrieval_args(parser):
    group = parser.add_argument_group("Retrieval", "IVF index and candidate generation")

    group.add_argument("--sim-threshold", type=float, default=None, help="Keep pairs with cosine strictly above this")
    group.add_argument("--top-k", type=int, default=None, help="Neighbors retrieved per term")
    group.add_argument("--nlist", type=int, default=None, help="Number of IVF cells")
    group.add_argument("--nprobe", type=int, default=None, help="Cells probed per query")
    group.add_argument("--seed", type=int, default=None, help="Seed for k-means sampling and seeding")
    group.add_argument(
        "--codec-range", type=str, default=None, choices=[item.value for item in CodecRange], help="SQ8 range mode"
    )
    return parser


def add_gate_args(parser):
    group = parser.add_argument_group("Gate", "Relation classification and symmetry check")

    group.add_argument("--syn-conf", type=float, default=None, help="Synonym confidence threshold")
    group.add_argument(
        "--conflict-policy",
        type=str,
        default=None,
        choices=[item.value for item in ConflictPolicy],
        help="How the reverse prediction is treated",
    )
    return parser


def add_cluster_args(parser):
    group = parser.add_argument_group("Clustering", "Drift-aware expansion and voting")

    group.add_argument("--ratio", type=float, default=None, help="Intersection ratio threshold for joining a cluster")
    group.add_argument(
        "--ratio-comparator",
        type=str,
        default=None,
        choices=[item.value for item in RatioComparator],
        help="Join on ratio > threshold (gt) or ratio >= threshold (ge)",
    )
    group.add_argument("--dump-soft-state", action="store_true", help="Write soft_clusters.json after expansion")
    return parser


OVERRIDES = {
    "output_dir": "output_dir",
    "workers": "workers",
    "sim_threshold": "sim_threshold",
    "top_k": "top_k",
    "nlist": "nlist",
    "nprobe": "nprobe",
    "seed": "seed",
    "codec_range": "codec_range",
    "syn_conf": "synonym_confidence_threshold",
    "conflict_policy": "conflict_policy",
    "ratio": "intersection_ratio_threshold",
    "ratio_comparator": "ratio_comparator",
}


def initialize(extra_args_provider):
    parser = argparse.ArgumentParser(description="Drift-aware synonym clustering")
    add_input_args(parser)
    add_retrieval_args(parser)
    add_gate_args(parser)
    add_cluster_args(parser)
    extra_args_provider(parser)
    return parser.parse_args()


def initialize_config(args) -> PipelineConfig:
    """Load the YAML config named by --config and apply command-line overrides."""
    if args.config is None:
        raise ValueError("--config is required for pipeline phases")
    config = PipelineConfig.load(args.config)
    values = config.as_plain_dict()
    for arg_name, field_name in OVERRIDES.items():
        value = getattr(args, arg_name, None)
        if value is not None:
            values[field_name] = value
    if args.dump_soft_state:
        values["dump_soft_state"] = True
    # re-run the field checks on the overridden values
    return PipelineConfig(**values)


def initialize_cluster_config(args) -> ClusterConfig:
    if args.config is not None:
        return initialize_config(args).cluster_config()
    defaults = ClusterConfig()
    return ClusterConfig(
        args.ratio if args.ratio is not None else defaults.intersection_ratio_threshold,
        args.ratio_comparator if args.ratio_comparator is not None else defaults.ratio_comparator,
    )
