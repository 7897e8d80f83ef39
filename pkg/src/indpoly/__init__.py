"""Independence polynomials of graphs and of their coronas G*."""
from .calculus import (Base, Corona, Join, Union, UnionPow, eval_expr, forward_transform,
                       inverse_transform, transform_matrix)
from .count import alpha, indpoly_enumerate, indpoly_recursive, maximal_stable_sets
from .exprlang import ParseError, parse, render
from .graph import Graph
from .poly import IntPoly, ModeReport, unimodality

__all__ = [
    "Base", "Corona", "Graph", "IntPoly", "Join", "ModeReport", "ParseError", "Union",
    "UnionPow", "alpha", "eval_expr", "forward_transform", "indpoly_enumerate",
    "indpoly_recursive", "inverse_transform", "maximal_stable_sets", "parse", "render",
    "transform_matrix", "unimodality",
]
