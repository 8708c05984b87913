"""Seed codes in the Hamming space."""
from .base import BlockCode, BlockCodeDescriptor, DecodeOutcome, ShortenedCode, hamming_distance, shorten
from .bch import BCHCode, bch_for_length, design_dimension, make_bch
from .grs import GRSCode, make_grs, reed_solomon
from .linear import FullSpace, LinearCode, full_space, repetition_code
from .product import ProductCode, product_code

__all__ = [
    "BCHCode",
    "BlockCode",
    "BlockCodeDescriptor",
    "DecodeOutcome",
    "FullSpace",
    "GRSCode",
    "LinearCode",
    "ProductCode",
    "ShortenedCode",
    "bch_for_length",
    "design_dimension",
    "full_space",
    "hamming_distance",
    "make_bch",
    "make_grs",
    "product_code",
    "reed_solomon",
    "repetition_code",
    "shorten",
]
