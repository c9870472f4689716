"""Erasing pattern languages: membership, teaching-set builders and bounded verification."""
from .matcher import match_witness, membership, pattern_morphism
from .pattern_core import (
    EPS,
    Alphabet,
    ClassSpec,
    Pattern,
    Sample,
    Word,
    classify,
    parse_pattern,
    parse_sample,
    parse_word,
    render_pattern,
    render_sample,
    render_word,
)
from .verifier import Bounds, brute_force_td, is_pbt_set, is_teaching_set

__all__ = [
    "EPS",
    "Alphabet",
    "Bounds",
    "ClassSpec",
    "Pattern",
    "Sample",
    "Word",
    "brute_force_td",
    "classify",
    "is_pbt_set",
    "is_teaching_set",
    "match_witness",
    "membership",
    "parse_pattern",
    "parse_sample",
    "parse_word",
    "pattern_morphism",
    "render_pattern",
    "render_sample",
    "render_word",
]
