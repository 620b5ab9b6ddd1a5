import time

import numpy as np

from initialize import initialize, initialize_config
from lexicon import load_embeddings, print_rank_0
from pipeline import artifact_path
from retrieval import SearchParams, brute_force_search, ivf_search, load_index, recall_at_k


def add_benchmark_args(parser):
    group = parser.add_argument_group("Benchmark", "nprobe sweep against brute force")

    group.add_argument("--queries", type=int, default=1000, help="Number of sampled query rows")
    group.add_argument("--nprobe-sweep", type=int, nargs="+", default=[1, 4, 16], help="nprobe values; nlist is added")
    return parser


if __name__ == "__main__":
    args = initialize(extra_args_provider=add_benchmark_args)
    config = initialize_config(args)
    matrix = load_embeddings(config.embeddings)
    index = load_index(artifact_path(config, "index"))

    rng = np.random.default_rng(config.seed)
    queries = rng.choice(matrix.count, size=min(args.queries, matrix.count), replace=False)
    exact_params = SearchParams(top_k=config.top_k, nprobe=index.nlist, sim_threshold=config.sim_threshold)
    exact = [brute_force_search(index, matrix.row(query), exact_params) for query in queries]

    for nprobe in sorted({n for n in args.nprobe_sweep if n <= index.nlist} | {index.nlist}):
        params = SearchParams(top_k=config.top_k, nprobe=nprobe, sim_threshold=config.sim_threshold)
        start = time.time()
        found = [ivf_search(index, matrix.row(query), params) for query in queries]
        elapsed = time.time() - start
        recall = np.mean([recall_at_k(approx, truth) for approx, truth in zip(found, exact)])
        print_rank_0(f"nprobe {nprobe}: recall@{config.top_k} {recall:.4f}, {elapsed * 1000 / len(queries):.2f} ms/query")
