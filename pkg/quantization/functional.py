import numpy as np

SQ8_LEVELS = 127


def _check_dim(values: np.ndarray, mins: np.ndarray):
    if values.shape[-1] != mins.shape[-1]:
        raise ValueError(f"dimensionality mismatch: got {values.shape[-1]}, codec has {mins.shape[-1]}")


def sq8_encode(values, mins, maxs) -> np.ndarray:
    """
    q = floor(127 * (v - min) / (max - min)), clamped to [0, 127].
    Dimensions with max == min encode to 0. Accepts a vector or a row-major batch.
    """
    values = np.asarray(values, dtype=np.float64)
    mins = np.asarray(mins, dtype=np.float64)
    maxs = np.asarray(maxs, dtype=np.float64)
    _check_dim(values, mins)

    span = maxs - mins
    degenerate = span <= 0
    scaled = (values - mins) / np.where(degenerate, 1.0, span)
    codes = np.floor(SQ8_LEVELS * scaled)
    codes = np.clip(codes, 0, SQ8_LEVELS)
    codes = np.where(degenerate, 0, codes)
    return codes.astype(np.uint8)


def sq8_decode(codes, mins, maxs) -> np.ndarray:
    """Midpoint reconstruction: min + (q + 0.5) / 127 * (max - min)."""
    codes = np.asarray(codes)
    mins = np.asarray(mins, dtype=np.float64)
    maxs = np.asarray(maxs, dtype=np.float64)
    _check_dim(codes, mins)
    if codes.size and int(codes.max()) > SQ8_LEVELS:
        raise ValueError(f"code {int(codes.max())} outside [0, {SQ8_LEVELS}]")

    span = np.maximum(maxs - mins, 0.0)
    return mins + (codes.astype(np.float64) + 0.5) / SQ8_LEVELS * span
