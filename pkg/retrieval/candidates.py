from multiprocessing import Pool
from typing import Dict, Iterator, List, Tuple

import tqdm

from lexicon import EmbeddingMatrix, ScoredCandidate, canonical_pair, is_rank_0

from .ivf import IVFIndex, SearchParams, ivf_search

QUERY_CHUNK = 256

_worker_state = {}


def _init_worker(index: IVFIndex, matrix: EmbeddingMatrix, params: SearchParams):
    _worker_state["index"] = index
    _worker_state["matrix"] = matrix
    _worker_state["params"] = params


def _search_chunk(bounds: Tuple[int, int]) -> List[Tuple[int, List[Tuple[int, float]]]]:
    index, matrix, params = _worker_state["index"], _worker_state["matrix"], _worker_state["params"]
    start, stop = bounds
    return [(query_id, ivf_search(index, matrix.data[query_id], params)) for query_id in range(start, stop)]


def _merge(best: Dict[Tuple[int, int], float], results):
    for query_id, neighbors in results:
        for term_id, cosine in neighbors:
            if term_id == query_id:
                continue
            pair = canonical_pair(query_id, term_id)
            if cosine > best.get(pair, float("-inf")):
                best[pair] = cosine


def generate_candidates(
    index: IVFIndex, matrix: EmbeddingMatrix, params: SearchParams, workers: int = 1
) -> Iterator[ScoredCandidate]:
    """
    Query every row against the index. Self-matches are dropped, the two
    retrieval directions of a pair are merged keeping the larger cosine, and
    pairs come out sorted by (a, b) whatever the worker count.
    """
    if index.count != matrix.count or index.dim != matrix.dim:
        raise ValueError(
            f"index ({index.count}x{index.dim}) was not built over this matrix ({matrix.count}x{matrix.dim})"
        )
    chunks = [(start, min(start + QUERY_CHUNK, matrix.count)) for start in range(0, matrix.count, QUERY_CHUNK)]

    best: Dict[Tuple[int, int], float] = {}
    progress = dict(total=len(chunks), desc="candidates", unit="chunk", disable=not is_rank_0())
    if workers > 1:
        with Pool(workers, initializer=_init_worker, initargs=(index, matrix, params)) as pool:
            for results in tqdm.tqdm(pool.imap(_search_chunk, chunks), **progress):
                _merge(best, results)
    else:
        _init_worker(index, matrix, params)
        for chunk in tqdm.tqdm(chunks, **progress):
            _merge(best, _search_chunk(chunk))

    for a, b in sorted(best):
        yield ScoredCandidate(a, b, best[(a, b)])
