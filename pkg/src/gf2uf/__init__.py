"""GF(2) elimination engine with batch and online LUP decomposition, a
generalized union-find decoder for CSS codes, and a seeded benchmark
harness comparing the two elimination backends."""

from .bitmatrix import BitMatrix, bits_to_int, format_bits, int_to_bits, parse_bits
from .codes import (
    CssCode,
    TannerGraph,
    build_color_666,
    build_toric_2d,
    build_toric_3d,
    make_code,
    tanner_graph,
    total_weight,
)
from .decoder import DecodeResult, Erasure, NonterminationError, decode, grow
from .lup import (
    GrowthBlock,
    InconsistentSystemError,
    LupState,
    OpCounters,
    is_consistent,
    lup_decompose,
    online_update,
    rank,
    solve,
    verify_factorisation,
)
from .sim import SimConfig, ShotRecord, aggregate, run_shot, sample_error, syndrome

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "CssCode",
    "DecodeResult",
    "Erasure",
    "GrowthBlock",
    "InconsistentSystemError",
    "LupState",
    "NonterminationError",
    "OpCounters",
    "ShotRecord",
    "SimConfig",
    "TannerGraph",
    "aggregate",
    "bits_to_int",
    "build_color_666",
    "build_toric_2d",
    "build_toric_3d",
    "decode",
    "format_bits",
    "grow",
    "int_to_bits",
    "is_consistent",
    "lup_decompose",
    "make_code",
    "online_update",
    "parse_bits",
    "rank",
    "run_shot",
    "sample_error",
    "solve",
    "syndrome",
    "tanner_graph",
    "total_weight",
    "verify_factorisation",
]
