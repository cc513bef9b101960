"""Decision procedures for the free braided monoidal bicategory, via braids,
braid movies and little cubes."""

from .braids import BraidWord, LabeledBraid, are_equal, labeled_equal, parse_word
from .coherence import iso_exists, two_cells_equal
from .functor import eval_one_cell
from .syntax import parse_cell, parse_obj, parse_two

__all__ = [
    "BraidWord", "LabeledBraid", "are_equal", "labeled_equal", "parse_word",
    "iso_exists", "two_cells_equal", "eval_one_cell", "parse_cell", "parse_obj", "parse_two",
]
