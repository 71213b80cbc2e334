"""Render library objects as JSON documents, graphviz DOT or ASCII diagrams.

DOT output can be laid out with graphviz, for example::

    coxeter-cubes cube canonical --rank 3 --format dot > cube.gv
    dot -Tpng -O cube.gv
"""

from __future__ import annotations

import json
import string
from typing import Callable, Optional

import networkx as nx
from pydantic import BaseModel

from core.cubes import CoxeterCube, CoxeterSquare
from core.generic import CoxeterMatrix
from core.groupoid import NuGenerator
from core.rectangles import BasedRectangle, BinaryTree, Leaf, Node, RectanglePartition
from core.transfer import TransferTriple
from core.typea import (
    Permutation,
    PositiveRoot,
    RootSet,
    canonical_reduced_word,
    inversion_set,
)
from core.types import (
    CoxeterMatrixDocument,
    CubeDocument,
    NuDocument,
    PartitionDocument,
    PermutationDocument,
    RenderFormat,
    SquareDocument,
    TransferDocument,
    TreeDocument,
)


# ----- Documents -----

def to_document(obj: object) -> BaseModel:
    """Pydantic document for a library object."""
    if isinstance(obj, BaseModel):
        return obj
    if isinstance(obj, Permutation):
        return PermutationDocument(
            rank=obj.rank, image=obj.to_list(), word=list(canonical_reduced_word(obj))
        )
    if isinstance(obj, CoxeterSquare):
        return SquareDocument(
            w=obj.w.to_list(),
            x=obj.x.to_list(),
            y=obj.y.to_list(),
            z=obj.z.to_list(),
            valid=obj.is_valid(),
        )
    if isinstance(obj, TransferTriple):
        return TransferDocument(
            w=obj.w.to_list(), x=obj.x.to_list(), y=obj.y.to_list(), holds=obj.holds
        )
    if isinstance(obj, CoxeterCube):
        return CubeDocument(
            rank=obj.rank, edges={label: e.to_list() for label, e in obj.edges.items()}
        )
    if isinstance(obj, RectanglePartition):
        return PartitionDocument(
            rank=obj.rank, rectangles=[r.as_list() for r in obj.sorted_rectangles()]
        )
    if isinstance(obj, (Leaf, Node)):
        return TreeDocument(tree=obj.serialize())
    if isinstance(obj, NuGenerator):
        return NuDocument(
            alpha=obj.alpha,
            base=sorted(obj.base),
            element=obj.element.to_list(),
            word=list(canonical_reduced_word(obj.element)),
        )
    if isinstance(obj, CoxeterMatrix):
        return CoxeterMatrixDocument(size=obj.size, m=[list(row) for row in obj.entries])
    raise ValueError(f"No JSON document for {type(obj).__name__}")


def render_json(obj: object) -> str:
    if isinstance(obj, (list, tuple)):
        payload: object = [
            to_document(item).model_dump(mode="json", by_alias=True) for item in obj
        ]
    else:
        payload = to_document(obj).model_dump(mode="json", by_alias=True)
    return json.dumps(payload, sort_keys=True, indent=2)


# ----- DOT -----

def _quote(value: object) -> str:
    return '"' + str(value).replace('"', '\\"') + '"'


def _graph_to_dot(
    graph: nx.DiGraph,
    name: str,
    node_attributes: Callable[[str, dict], list[str]],
    edge_attributes: Callable[[str, str, dict], list[str]],
) -> str:
    lines = [f"digraph {name} {{"]
    for node in sorted(graph.nodes):
        attributes = node_attributes(node, graph.nodes[node])
        suffix = f" [{', '.join(attributes)}]" if attributes else ""
        lines.append(f"\t{_quote(node)}{suffix};")
    for source, target in sorted(graph.edges):
        attributes = edge_attributes(source, target, graph.edges[source, target])
        suffix = f" [{', '.join(attributes)}]" if attributes else ""
        lines.append(f"\t{_quote(source)} -> {_quote(target)}{suffix};")
    lines.append("}")
    return "\n".join(lines)


def render_cube_dot(cube: CoxeterCube) -> str:
    """Bit-string vertices, edges labelled by their element in one-line notation."""
    return _graph_to_dot(
        cube.graph(),
        "cube",
        lambda node, data: [f"label={_quote(node)}"],
        lambda source, target, data: [f"label={_quote(data['element'])}"],
    )


def tree_graph(tree: BinaryTree) -> nx.DiGraph:
    """Nodes named by their L/R path from the root (``root`` for the root itself)."""
    graph = nx.DiGraph()

    def add(node: BinaryTree, path: str) -> str:
        name = path or "root"
        graph.add_node(name, leaf=isinstance(node, Leaf))
        if isinstance(node, Node):
            for step, child in (("L", node.left), ("R", node.right)):
                graph.add_edge(name, add(child, path + step), side=step)
        return name

    add(tree, "")
    return graph


def render_tree_dot(tree: BinaryTree) -> str:
    return _graph_to_dot(
        tree_graph(tree),
        "tree",
        lambda node, data: ["shape=box", 'label=""'] if data["leaf"] else ["shape=circle"],
        lambda source, target, data: [f"label={_quote(data['side'])}"],
    )


# ----- ASCII -----

def _diamond(rank: int, cell: Callable[[PositiveRoot], str]) -> str:
    """Root (i, j) at column i + j, deepest row on top."""
    width = 2 * rank + 1
    rows = []
    for depth in range(rank, 0, -1):
        line = [" "] * width
        for lo in range(1, rank + 2 - depth):
            root = PositiveRoot(lo, lo + depth)
            line[root.lo + root.hi - 3] = cell(root)
        rows.append("".join(line).rstrip())
    return "\n".join(rows)


# Sides of a root's cell as (column offset, row offset, glyph, neighbour (dlo, dhi)).
_CELL_SIDES = (
    (-1, -1, "/", (-1, 0)),
    (1, -1, "\\", (0, 1)),
    (-1, 1, "\\", (0, -1)),
    (1, 1, "/", (1, 0)),
)


def render_partition_ascii(partition: RectanglePartition) -> str:
    """Rectangles drawn as outlined regions of the root diamond.

    Root (i, j) sits at column 2(i + j) - 5 and row 2(n - depth) + 1 inside a
    diamond-shaped cell; a cell side is drawn where the neighbouring root lies
    in another rectangle or outside the poset. Cells carry the rectangle's
    letter (A for the first in sorted order), explained in the legend.
    """
    rank = partition.rank
    letters = {
        rectangle: string.ascii_uppercase[index % 26]
        for index, rectangle in enumerate(partition.sorted_rectangles())
    }

    def owner(lo: int, hi: int) -> Optional[BasedRectangle]:
        if not 1 <= lo < hi <= rank + 1:
            return None
        return partition.rectangle_containing(PositiveRoot(lo, hi))

    grid = [[" "] * (4 * rank - 1) for _ in range(2 * rank + 1)]
    for lo in range(1, rank + 1):
        for hi in range(lo + 1, rank + 2):
            column, row = 2 * (lo + hi) - 5, 2 * (rank - (hi - lo)) + 1
            rectangle = owner(lo, hi)
            grid[row][column] = letters[rectangle] if rectangle is not None else "."
            for dc, dr, glyph, (dlo, dhi) in _CELL_SIDES:
                neighbour = owner(lo + dlo, hi + dhi)
                if neighbour is None or neighbour != rectangle:
                    grid[row + dr][column + dc] = glyph
    diagram = "\n".join("".join(line).rstrip() for line in grid)
    legend = "\n".join(f"{letter} = {rectangle}" for rectangle, letter in letters.items())
    return f"{diagram}\n\n{legend}" if legend else diagram


def render_roots_ascii(rank: int, roots: RootSet) -> str:
    """Root poset with members of ``roots`` drawn as ``#``."""
    return _diamond(rank, lambda root: "#" if root in roots else ".")


# ----- Dispatch -----

def render(obj: object, fmt: RenderFormat | str = RenderFormat.JSON) -> str:
    """Render ``obj``; raises ValueError when the format does not apply to it."""
    try:
        fmt = RenderFormat(fmt)
    except ValueError:
        raise ValueError(f"Unknown render format: {fmt!r}") from None
    if fmt is RenderFormat.JSON:
        return render_json(obj)
    if fmt is RenderFormat.DOT:
        if isinstance(obj, CoxeterCube):
            return render_cube_dot(obj)
        if isinstance(obj, (Leaf, Node)):
            return render_tree_dot(obj)
    if fmt is RenderFormat.ASCII:
        if isinstance(obj, RectanglePartition):
            return render_partition_ascii(obj)
        if isinstance(obj, Permutation):
            return render_roots_ascii(obj.rank, inversion_set(obj))
    raise ValueError(f"Cannot render {type(obj).__name__} as {fmt.value}")


def render_optional(obj: Optional[object], fmt: RenderFormat | str) -> str:
    """``null`` for a missing result in JSON, an empty string otherwise."""
    if obj is None:
        return "null" if RenderFormat(fmt) is RenderFormat.JSON else ""
    return render(obj, fmt)
