"""Evil-avoiding, rectangular and 1-almost-increasing permutations.

Codecs between each class and its operator language, the length-preserving
word bijection that links the two languages, counting formulas, and
brute-force oracles to check all of it.
"""

from .almost_inc import decode_ai, encode_ai, is_almost_increasing
from .enumeration import evil_count_closed, evil_count_recur, refined_count, seq_count
from .evil import decode_evil, encode_evil
from .langs import Lang, generate_words, map_b, map_b_inv
from .maps import convert
from .perm import format_perm, is_evil_avoiding, is_rectangular, parse_perm, recoils
from .rect import decode_rect, encode_rect

__all__ = [
    "Lang",
    "convert",
    "decode_ai",
    "decode_evil",
    "decode_rect",
    "encode_ai",
    "encode_evil",
    "encode_rect",
    "evil_count_closed",
    "evil_count_recur",
    "format_perm",
    "generate_words",
    "is_almost_increasing",
    "is_evil_avoiding",
    "is_rectangular",
    "map_b",
    "map_b_inv",
    "parse_perm",
    "recoils",
    "refined_count",
    "seq_count",
]
