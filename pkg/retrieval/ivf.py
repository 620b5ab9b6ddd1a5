from __future__ import annotations

import io
import math
import struct

import numpy as np

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from lexicon import EmbeddingMatrix
from quantization import SQ8Codec, CodecRange, quantize

from .kmeans import kmeans_train, DEFAULT_KMEANS_ITERS

INDEX_MAGIC = b"LXIVF1"
INDEX_HEADER = struct.Struct("<6sIII")
MAX_SAMPLE_PER_CELL = 256


@dataclass
class SearchParams:
    top_k: int = 100
    nprobe: int = 1
    sim_threshold: float = 0.70

    def __post_init__(self):
        assert self.top_k >= 1, "top_k must be >= 1"
        assert self.nprobe >= 1, "nprobe must be >= 1"
        # thresholds above 1 are accepted and simply match nothing
        assert self.sim_threshold >= -1.0, "sim_threshold must be >= -1"


def default_nlist(count: int) -> int:
    return max(1, min(count, math.ceil(4 * math.sqrt(count))))


def default_nprobe(nlist: int) -> int:
    return max(1, min(nlist, math.ceil(math.log2(nlist)))) if nlist > 1 else 1


class IVFIndex:
    """
    Inverted file over SQ8 codes. Every indexed TermId sits in exactly one
    posting list, the one of its argmax-cosine centroid; lists are sorted by TermId.
    """

    def __init__(self, centroids: np.ndarray, codec: SQ8Codec, ids: Sequence[np.ndarray], codes: Sequence[np.ndarray]):
        self.centroids = np.asarray(centroids, dtype=np.float32)
        self.codec = codec
        self.ids = [np.asarray(cell_ids, dtype=np.uint32) for cell_ids in ids]
        self.codes = [np.asarray(cell_codes, dtype=np.uint8).reshape(-1, self.dim) for cell_codes in codes]
        assert len(self.ids) == len(self.codes) == self.nlist, "one posting list per cell"
        assert codec.dim == self.dim, "codec and centroid dimensionality differ"
        self._decoded = [None] * self.nlist

    @property
    def nlist(self) -> int:
        return self.centroids.shape[0]

    @property
    def dim(self) -> int:
        return self.centroids.shape[1]

    @property
    def count(self) -> int:
        return sum(len(cell_ids) for cell_ids in self.ids)

    @property
    def posting_sizes(self) -> List[int]:
        return [len(cell_ids) for cell_ids in self.ids]

    def decoded(self, cell: int) -> Tuple[np.ndarray, np.ndarray]:
        """Decoded vectors of one cell and their L2 norms, cached."""
        if self._decoded[cell] is None:
            vectors = self.codec.decode(self.codes[cell])
            self._decoded[cell] = (vectors, np.linalg.norm(vectors, axis=1))
        return self._decoded[cell]

    def decoded_matrix(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """All decoded vectors in TermId order: (ids, vectors, norms)."""
        ids = np.concatenate(self.ids) if self.nlist else np.zeros(0, dtype=np.uint32)
        vectors = np.concatenate([self.decoded(cell)[0] for cell in range(self.nlist)])
        norms = np.concatenate([self.decoded(cell)[1] for cell in range(self.nlist)])
        order = np.argsort(ids, kind="stable")
        return ids[order], vectors[order], norms[order]

    def probe_order(self, query: np.ndarray) -> np.ndarray:
        scores = self.centroids.astype(np.float64) @ query
        return np.argsort(-scores, kind="stable")

    def to_bytes(self) -> bytes:
        buffer = io.BytesIO()
        buffer.write(INDEX_HEADER.pack(INDEX_MAGIC, self.nlist, self.dim, self.count))
        buffer.write(self.centroids.astype("<f4").tobytes())
        buffer.write(self.codec.mins.astype("<f4").tobytes())
        buffer.write(self.codec.maxs.astype("<f4").tobytes())
        buffer.write(np.asarray(self.posting_sizes, dtype="<u4").tobytes())
        for cell_ids, cell_codes in zip(self.ids, self.codes):
            buffer.write(cell_ids.astype("<u4").tobytes())
            buffer.write(cell_codes.tobytes())
        return buffer.getvalue()

    @classmethod
    def from_bytes(cls, payload: bytes, source: str = "<bytes>") -> "IVFIndex":
        if len(payload) < INDEX_HEADER.size:
            raise ValueError(f"{source}: truncated index header")
        magic, nlist, dim, count = INDEX_HEADER.unpack_from(payload)
        if magic != INDEX_MAGIC:
            raise ValueError(f"{source}: bad magic {magic!r}, expected {INDEX_MAGIC!r}")
        offset = INDEX_HEADER.size

        def take(dtype, n):
            nonlocal offset
            size = np.dtype(dtype).itemsize * n
            if offset + size > len(payload):
                raise ValueError(f"{source}: truncated index payload")
            array = np.frombuffer(payload, dtype=dtype, count=n, offset=offset)
            offset += size
            return array

        centroids = take("<f4", nlist * dim).reshape(nlist, dim)
        codec = SQ8Codec(take("<f4", dim), take("<f4", dim))
        sizes = take("<u4", nlist)
        if int(sizes.sum()) != count:
            raise ValueError(f"{source}: posting sizes sum to {int(sizes.sum())}, header count is {count}")
        ids, codes = [], []
        for size in sizes:
            ids.append(take("<u4", int(size)))
            codes.append(take("u1", int(size) * dim).reshape(int(size), dim))
        return cls(centroids, codec, ids, codes)


def ivf_build(
    matrix: EmbeddingMatrix,
    nlist: Optional[int] = None,
    seed: int = 0,
    iters: int = DEFAULT_KMEANS_ITERS,
    codec_range: CodecRange = CodecRange.PER_DIMENSION,
) -> IVFIndex:
    if matrix.count == 0:
        raise ValueError("cannot build an index over an empty embedding matrix")
    if nlist is None:
        nlist = default_nlist(matrix.count)
    if nlist < 1:
        raise ValueError(f"nlist must be >= 1, got {nlist}")

    vectors = matrix.data
    sample = vectors
    if matrix.count > MAX_SAMPLE_PER_CELL * nlist:
        rng = np.random.default_rng(seed)
        rows = np.sort(rng.choice(matrix.count, size=MAX_SAMPLE_PER_CELL * nlist, replace=False))
        sample = vectors[rows]

    centroids = kmeans_train(sample, nlist, iters=iters, seed=seed)
    codec, codes = quantize(matrix, codec_range)

    assign = np.argmax(vectors.astype(np.float64) @ centroids.T.astype(np.float64), axis=1)
    ids = [np.flatnonzero(assign == cell) for cell in range(nlist)]
    return IVFIndex(centroids, codec, ids, [codes[cell_ids] for cell_ids in ids])


def _as_query(index: IVFIndex, query) -> np.ndarray:
    query = np.asarray(query, dtype=np.float64).reshape(-1)
    if query.shape[0] != index.dim:
        raise ValueError(f"dimensionality mismatch: query has {query.shape[0]}, index has {index.dim}")
    norm = np.linalg.norm(query)
    return query / norm if norm > 0 else query


def _rank(ids: np.ndarray, cosines: np.ndarray, params: SearchParams) -> List[Tuple[int, float]]:
    keep = cosines > params.sim_threshold
    ids, cosines = ids[keep], cosines[keep]
    order = np.lexsort((ids, -cosines))[: params.top_k]
    return [(int(ids[i]), float(cosines[i])) for i in order]


def _cosines(vectors: np.ndarray, norms: np.ndarray, query: np.ndarray) -> np.ndarray:
    return (vectors @ query) / np.where(norms == 0, 1.0, norms)


def ivf_search(index: IVFIndex, query, params: SearchParams) -> List[Tuple[int, float]]:
    """Probe the nprobe nearest cells; return at most top_k (TermId, cosine) above the threshold."""
    if params.nprobe > index.nlist:
        raise ValueError(f"nprobe={params.nprobe} exceeds nlist={index.nlist}")
    query = _as_query(index, query)
    cells = index.probe_order(query)[: params.nprobe]

    ids, cosines = [], []
    for cell in cells:
        if len(index.ids[cell]) == 0:
            continue
        vectors, norms = index.decoded(cell)
        ids.append(index.ids[cell])
        cosines.append(_cosines(vectors, norms, query))
    if not ids:
        return []
    return _rank(np.concatenate(ids).astype(np.int64), np.concatenate(cosines), params)


def brute_force_search(index: IVFIndex, query, params: SearchParams) -> List[Tuple[int, float]]:
    """Exhaustive scan over every decoded vector; the exactness oracle for ivf_search."""
    query = _as_query(index, query)
    ids, vectors, norms = index.decoded_matrix()
    return _rank(ids.astype(np.int64), _cosines(vectors, norms, query), params)


def recall_at_k(approx: Sequence[Tuple[int, float]], exact: Sequence[Tuple[int, float]]) -> float:
    if not exact:
        return 1.0
    truth = {term_id for term_id, _ in exact}
    return len(truth & {term_id for term_id, _ in approx}) / len(truth)


def save_index(index: IVFIndex, path):
    with open(path, "wb") as file:
        file.write(index.to_bytes())


def load_index(path) -> IVFIndex:
    with open(path, "rb") as file:
        return IVFIndex.from_bytes(file.read(), source=str(path))
