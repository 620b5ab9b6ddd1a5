from .functional import SQ8_LEVELS, sq8_encode, sq8_decode
from .codec import SQ8Codec, CodecRange, train_codec


def quantize(matrix, codec_range: CodecRange = CodecRange.PER_DIMENSION):
    """Train a codec on every row of the matrix and return (codec, codes)."""
    codec = train_codec(matrix.data, codec_range)
    return codec, codec.encode(matrix.data)
