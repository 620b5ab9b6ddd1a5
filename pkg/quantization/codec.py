from __future__ import annotations

import numpy as np

from dataclasses import dataclass
from enum import Enum

from .functional import SQ8_LEVELS, sq8_encode, sq8_decode


class CodecRange(Enum):
    PER_DIMENSION = "per-dimension"
    GLOBAL = "global"


@dataclass(frozen=True)
class SQ8Codec:
    mins: np.ndarray  # [dim], float32
    maxs: np.ndarray  # [dim], float32
    levels: int = SQ8_LEVELS

    def __post_init__(self):
        mins = np.asarray(self.mins, dtype=np.float32).reshape(-1)
        maxs = np.asarray(self.maxs, dtype=np.float32).reshape(-1)
        assert mins.shape == maxs.shape, "codec min/max must have the same dimensionality"
        assert np.all(maxs >= mins), "codec max must be >= min on every dimension"
        assert self.levels == SQ8_LEVELS, f"SQ8 uses {SQ8_LEVELS} levels"
        mins.flags.writeable = False
        maxs.flags.writeable = False
        object.__setattr__(self, "mins", mins)
        object.__setattr__(self, "maxs", maxs)

    @property
    def dim(self) -> int:
        return self.mins.shape[0]

    def encode(self, values) -> np.ndarray:
        return sq8_encode(values, self.mins, self.maxs)

    def decode(self, codes) -> np.ndarray:
        return sq8_decode(codes, self.mins, self.maxs)

    def max_error(self) -> np.ndarray:
        return (self.maxs.astype(np.float64) - self.mins.astype(np.float64)) / self.levels


def train_codec(vectors, codec_range: CodecRange = CodecRange.PER_DIMENSION) -> SQ8Codec:
    vectors = np.asarray(vectors, dtype=np.float32)
    if vectors.ndim != 2 or vectors.shape[0] == 0:
        raise ValueError("codec training needs a non-empty 2-dimensional sample")
    if codec_range == CodecRange.GLOBAL:
        mins = np.full(vectors.shape[1], vectors.min(), dtype=np.float32)
        maxs = np.full(vectors.shape[1], vectors.max(), dtype=np.float32)
    else:
        mins = vectors.min(axis=0)
        maxs = vectors.max(axis=0)
    return SQ8Codec(mins, maxs)
