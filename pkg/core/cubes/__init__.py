"""Coxeter squares and Coxeter n-cubes."""

from core.cubes.cube import (
    CoxeterCube,
    TerminalEdgeSet,
    canonical_terminal_set,
    construct_inductive,
    cube_canonical,
    cube_collapse,
    cube_flip,
    cube_from_terminal_edges,
    cube_validate,
    edge_labels,
    flip_orbit,
    flip_terminal_set,
    one_cube,
    path_products,
    product_cube,
    terminal_label,
    vertices,
)
from core.cubes.search import (
    brute_force_cubes,
    enumerate_squares,
    is_product_square,
    orbit_edge_elements,
)
from core.cubes.squares import (
    CoxeterSquare,
    square_complete,
    square_reorient,
    square_validate,
)

__all__ = [
    "CoxeterCube",
    "TerminalEdgeSet",
    "canonical_terminal_set",
    "construct_inductive",
    "cube_canonical",
    "cube_collapse",
    "cube_flip",
    "cube_from_terminal_edges",
    "cube_validate",
    "edge_labels",
    "flip_orbit",
    "flip_terminal_set",
    "one_cube",
    "path_products",
    "product_cube",
    "terminal_label",
    "vertices",
    "brute_force_cubes",
    "enumerate_squares",
    "is_product_square",
    "orbit_edge_elements",
    "CoxeterSquare",
    "square_complete",
    "square_reorient",
    "square_validate",
]
