"""Rank-modulation codes: permutation codes under the Kendall tau metric.

Three families are built from classical Hamming-space codes:

* :class:`PPCodec`: linearized permutation polynomials over GF(p^m),
  decoded through prefix sums and a generalized Reed-Solomon decoder.
* :class:`GrayCodec`: a binary seed code read through the Gray map into
  inversion-vector coordinates.
* :class:`QuantACodec` / :class:`QuantBCodec`: seed symbols spread over
  quantization bins of the inversion vector, for many Kendall errors.
"""
from .config import ConfigError, build_codec, build_seed
from .gray import GrayCodec, GrayLayout, gray_map, inverse_gray
from .perm import (
    InversionVector,
    KendallChannelConfig,
    Permutation,
    apply_kendall_errors,
    compose,
    from_inversion_vector,
    invert,
    kendall_distance,
    to_inversion_vector,
)
from .permpoly import PPCodec
from .quantize import QuantACodec, QuantBCodec, radius_iiia, radius_iiib
from .simulate import SimReport, run_simulation

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "GrayCodec",
    "GrayLayout",
    "InversionVector",
    "KendallChannelConfig",
    "PPCodec",
    "Permutation",
    "QuantACodec",
    "QuantBCodec",
    "SimReport",
    "apply_kendall_errors",
    "build_codec",
    "build_seed",
    "compose",
    "from_inversion_vector",
    "gray_map",
    "inverse_gray",
    "invert",
    "kendall_distance",
    "radius_iiia",
    "radius_iiib",
    "run_simulation",
    "to_inversion_vector",
]
