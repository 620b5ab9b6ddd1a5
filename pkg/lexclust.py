import time

from evaluation import evaluate_all_specs
from initialize import initialize, initialize_config, initialize_cluster_config
from lexicon import print_rank_0
from pipeline import PHASES, run_all, run_phase


def add_lexclust_specific_args(parser):
    """Subcommand and evaluation arguments"""
    parser.add_argument("command", choices=list(PHASES) + ["all", "eval"], help="Pipeline phase, all phases, or eval")

    group = parser.add_argument_group("Evaluation", "Synthetic contamination specs")
    group.add_argument("--spec", nargs="+", default=[], help="Spec files or directories searched for *.json")
    group.add_argument("--output", type=str, default=None, help="Write the JSON reports here")
    return parser


def main():
    args = initialize(extra_args_provider=add_lexclust_specific_args)

    start = time.time()
    if args.command == "eval":
        if not args.spec:
            raise ValueError("eval needs at least one --spec path")
        evaluate_all_specs(args.spec, initialize_cluster_config(args), output=args.output)
    elif args.command == "all":
        run_all(initialize_config(args))
    else:
        run_phase(args.command, initialize_config(args))
    print_rank_0(f"Finish {args.command} in {time.time() - start:.1f}s")


if __name__ == "__main__":
    main()
