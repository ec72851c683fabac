"""Exact (d+1)-coloring of d-simplex complexes by peeling exposed simplices."""
from fractions import Fraction

from ._core import (
    Complex,
    GeometryInvariantError,
    InputError,
    InvalidComplexError,
    LimitExceededError,
    ParseError,
    UnrealizableComplexError,
    UnsupportedDimensionError,
    __version__,
    analyze_all_kd1,
    analyze_kd1,
    color,
    dual_edges,
    exact_chromatic,
    find_clique,
    generate,
    generator_kinds,
    load,
    peel,
    render_svg,
    save,
    stats,
    validate,
    verify_coloring,
)


def vertices(complex_):
    """Vertex coordinates as lists of Fraction."""
    return [[Fraction(x) for x in row] for row in complex_.vertex_strings]


__all__ = [
    "Complex",
    "GeometryInvariantError",
    "InputError",
    "InvalidComplexError",
    "LimitExceededError",
    "ParseError",
    "UnrealizableComplexError",
    "UnsupportedDimensionError",
    "analyze_all_kd1",
    "analyze_kd1",
    "color",
    "dual_edges",
    "exact_chromatic",
    "find_clique",
    "generate",
    "generator_kinds",
    "load",
    "peel",
    "render_svg",
    "save",
    "stats",
    "validate",
    "verify_coloring",
    "vertices",
]
