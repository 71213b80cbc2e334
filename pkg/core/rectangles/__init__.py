"""Based rectangle partitions of the A_n root poset and binary trees."""

from core.rectangles.enumeration import (
    CubeClasses,
    bigrassmannian_scan,
    edge_set,
    edge_set_from_orbits,
    enumerate_cube_classes,
    enumerate_partitions,
    sorted_elements,
)
from core.rectangles.partitions import (
    BasedRectangle,
    RectanglePartition,
    SubtriangleInterval,
    all_rectangles,
    compatible_subtriangles,
    cube_of_partition,
    element_of_rectangle,
    flip_subtriangle,
    highest_rectangle_of,
    is_compatible,
    partition_from_triples,
    partition_of_cube,
    rectangle_of_element,
    rectangle_roots,
    terminal_edges_of_partition,
)
from core.rectangles.trees import (
    LEAF,
    BinaryTree,
    Leaf,
    Node,
    catalan,
    enumerate_trees,
    from_nested,
    internal_paths,
    mirror,
    partition_to_tree,
    serialized_text,
    tree_canonical,
    tree_flip,
    tree_to_partition,
    wedderburn_etherington,
)

__all__ = [
    "CubeClasses",
    "bigrassmannian_scan",
    "edge_set",
    "edge_set_from_orbits",
    "enumerate_cube_classes",
    "enumerate_partitions",
    "sorted_elements",
    "BasedRectangle",
    "RectanglePartition",
    "SubtriangleInterval",
    "all_rectangles",
    "compatible_subtriangles",
    "cube_of_partition",
    "element_of_rectangle",
    "flip_subtriangle",
    "highest_rectangle_of",
    "is_compatible",
    "partition_from_triples",
    "partition_of_cube",
    "rectangle_of_element",
    "rectangle_roots",
    "terminal_edges_of_partition",
    "LEAF",
    "BinaryTree",
    "Leaf",
    "Node",
    "catalan",
    "enumerate_trees",
    "from_nested",
    "internal_paths",
    "mirror",
    "partition_to_tree",
    "serialized_text",
    "tree_canonical",
    "tree_flip",
    "tree_to_partition",
    "wedderburn_etherington",
]
