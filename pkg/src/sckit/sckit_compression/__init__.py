"""
SCKit Compression Package

Compression sets (stored examples plus side information), the
compress/reconstruct pipeline and the binary file format.
"""

from .codec import MAGIC, deserialize, load_compression_set, save_compression_set, serialize
from .scheme import (
    BINARY_SPARSIFY_ETA,
    FORMAT_VERSION,
    CompressionSet,
    PipelineResult,
    ReconstructedHypothesis,
    SchemeMeta,
    build_compression_set,
    compress,
    reconstruct,
    run_pipeline,
    sparsify_eta,
)
from .side_info import (
    SideInfo,
    decode_side_info,
    encode_side_info,
    permutation_rank_width,
    rank_permutation,
    side_info_budget,
    unrank_permutation,
)

__all__ = [
    "BINARY_SPARSIFY_ETA",
    "CompressionSet",
    "FORMAT_VERSION",
    "MAGIC",
    "PipelineResult",
    "ReconstructedHypothesis",
    "SchemeMeta",
    "SideInfo",
    "build_compression_set",
    "compress",
    "decode_side_info",
    "deserialize",
    "encode_side_info",
    "load_compression_set",
    "permutation_rank_width",
    "rank_permutation",
    "reconstruct",
    "run_pipeline",
    "save_compression_set",
    "serialize",
    "side_info_budget",
    "sparsify_eta",
    "unrank_permutation",
]
