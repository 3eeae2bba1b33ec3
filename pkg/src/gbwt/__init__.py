"""Run-length-compressed FM-index over haplotype paths in a sequence graph."""

from .compressed import CompressedGBWT, CorruptIndexError
from .dynamic import DynamicGBWT, MergeError, merge
from .model import ENDMARKER, Graph, decode_oriented, encode_oriented, flip, reverse_path
from .query import (BidirectionalState, SearchState, bd_extend_backward,
                    bd_extend_forward, bd_find, extend, extract, find,
                    locate_direct, locate_fast)

__all__ = [
    "ENDMARKER",
    "BidirectionalState",
    "CompressedGBWT",
    "CorruptIndexError",
    "DynamicGBWT",
    "Graph",
    "MergeError",
    "SearchState",
    "bd_extend_backward",
    "bd_extend_forward",
    "bd_find",
    "decode_oriented",
    "encode_oriented",
    "extend",
    "extract",
    "find",
    "flip",
    "locate_direct",
    "locate_fast",
    "merge",
    "reverse_path",
]

__version__ = "0.1.0"
