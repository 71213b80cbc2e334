"""Utilities package for parsing input and rendering output."""

from core.utils.parsing import (
    parse_cube,
    parse_element,
    parse_elements,
    parse_index_set,
    parse_matrix,
    parse_partition,
    parse_permutation,
    parse_root,
    parse_tree,
    parse_word,
)
from core.utils.rendering import (
    render,
    render_cube_dot,
    render_json,
    render_optional,
    render_partition_ascii,
    render_roots_ascii,
    render_tree_dot,
    to_document,
    tree_graph,
)

__all__ = [
    "parse_cube",
    "parse_element",
    "parse_elements",
    "parse_index_set",
    "parse_matrix",
    "parse_partition",
    "parse_permutation",
    "parse_root",
    "parse_tree",
    "parse_word",
    "render",
    "render_cube_dot",
    "render_json",
    "render_optional",
    "render_partition_ascii",
    "render_roots_ascii",
    "render_tree_dot",
    "to_document",
    "tree_graph",
]
