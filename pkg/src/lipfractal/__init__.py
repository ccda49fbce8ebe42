"""Exact toolkit for a bi-Lipschitz map between two fractal squares E and F.

The map is built on codings: points of E and F are coded by sequences over
{1,...,5}, the set Omega of codes ending in 4^inf is mapped to itself by a
segment-wise substitution g (also realized by a five-state transducer), and
distances are controlled by separation numbers read off neighbor automata.
"""

from .fractal import E, F, FractalSquare, cell_of, make_system, project, sq_dist
from .neighbor import build, itinerary, separation
from .segments import decompose_E, decompose_F, g0, g0_inv, g_inv, g_map, g_word
from .symbolic import INF, Code, common_prefix_len, format_code, letter_at, parse_code

__all__ = [
    "E", "F", "FractalSquare", "cell_of", "make_system", "project", "sq_dist",
    "build", "itinerary", "separation",
    "decompose_E", "decompose_F", "g0", "g0_inv", "g_inv", "g_map", "g_word",
    "INF", "Code", "common_prefix_len", "format_code", "letter_at", "parse_code",
]
