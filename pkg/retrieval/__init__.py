from .kmeans import kmeans_train, DEFAULT_KMEANS_ITERS
from .ivf import (
    IVFIndex,
    SearchParams,
    default_nlist,
    default_nprobe,
    ivf_build,
    ivf_search,
    brute_force_search,
    recall_at_k,
    save_index,
    load_index,
)
from .candidates import generate_candidates
