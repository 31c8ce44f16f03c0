"""Pattern-avoiding word-representable graphs."""

from .graphs import Graph, Relabeling, relabel, is_isomorphic
from .words import Pattern, parse_word, format_word, avoids, alternates, word_to_graph
from .search import Certificate, SearchBounds, find_representant, decide_disjoint_132_123
from .circle import ChordDiagram, chords_from_word, is_circle_graph

__all__ = [
    "Graph", "Relabeling", "relabel", "is_isomorphic",
    "Pattern", "parse_word", "format_word", "avoids", "alternates", "word_to_graph",
    "Certificate", "SearchBounds", "find_representant", "decide_disjoint_132_123",
    "ChordDiagram", "chords_from_word", "is_circle_graph",
]
