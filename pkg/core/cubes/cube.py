"""Coxeter n-cubes.

A cube of dimension n has vertices labelled by bit strings of length n and
edges labelled by strings over ``0``, ``1``, ``*`` with a single ``*``; the
edge runs from the vertex with ``*`` replaced by ``0`` to the one with ``*``
replaced by ``1``. Direction k is the position of the ``*`` (1-based).

Edge elements multiply on the left along a path, so the path product to a
vertex is ``e_m ... e_2 e_1``. Within the face spanned by directions p < q
at a base vertex v, the square is read as

* ``w``: direction-q edge leaving ``v + e_p``
* ``x``: direction-p edge leaving ``v``
* ``y``: direction-p edge leaving ``v + e_q``
* ``z``: direction-q edge leaving ``v``
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, product
from types import MappingProxyType
from typing import Iterator, Mapping, Optional, Sequence

import networkx as nx

from core.cubes.squares import CoxeterSquare, square_validate
from core.exceptions import InvalidCubeError
from core.groupoid import nu
from core.typea import (
    Permutation,
    compose,
    identity,
    join,
    same_rank,
    simple_reflection,
    support,
)

logger = logging.getLogger(__name__)

TerminalEdgeSet = tuple[Permutation, ...]


# ----- Labels -----

def vertices(dimension: int) -> list[str]:
    return ["".join(bits) for bits in product("01", repeat=dimension)]


def edge_labels(dimension: int) -> list[str]:
    labels = []
    for k in range(dimension):
        for bits in product("01", repeat=dimension - 1):
            labels.append("".join(bits[:k]) + "*" + "".join(bits[k:]))
    return sorted(labels)


def label_direction(label: str) -> int:
    return label.index("*") + 1


def label_source(label: str) -> str:
    return label.replace("*", "0")


def label_target(label: str) -> str:
    return label.replace("*", "1")


def terminal_label(dimension: int, direction: int) -> str:
    return "1" * (direction - 1) + "*" + "1" * (dimension - direction)


def edge_leaving(vertex: str, direction: int) -> str:
    """Label of the direction edge leaving ``vertex`` (whose bit there must be 0)."""
    return vertex[: direction - 1] + "*" + vertex[direction:]


def _set_bit(vertex: str, direction: int) -> str:
    return vertex[: direction - 1] + "1" + vertex[direction:]


def _toggle(label: str, direction: int) -> str:
    bit = label[direction - 1]
    flipped = {"0": "1", "1": "0"}[bit]
    return label[: direction - 1] + flipped + label[direction:]


def _is_valid_label(label: str, dimension: int) -> bool:
    return (
        len(label) == dimension
        and label.count("*") == 1
        and all(ch in "01*" for ch in label)
    )


# ----- Cube -----

@dataclass(frozen=True)
class CoxeterCube:
    """An oriented n-cube with a group element on every edge."""

    dimension: int
    edges: Mapping[str, Permutation] = field(hash=False)

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise InvalidCubeError("A cube needs dimension at least 1")
        expected = set(edge_labels(self.dimension))
        if set(self.edges) != expected:
            raise InvalidCubeError(
                f"A {self.dimension}-cube needs exactly the {len(expected)} edge labels"
            )
        same_rank(*self.edges.values())
        ordered = {label: self.edges[label] for label in sorted(self.edges)}
        object.__setattr__(self, "edges", MappingProxyType(ordered))

    @property
    def rank(self) -> int:
        return next(iter(self.edges.values())).rank

    def edge(self, label: str) -> Permutation:
        return self.edges[label]

    def terminal_edges(self) -> TerminalEdgeSet:
        """Edges entering the all-ones vertex, in direction order."""
        return tuple(
            self.edges[terminal_label(self.dimension, k)] for k in range(1, self.dimension + 1)
        )

    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(vertices(self.dimension))
        for label, element in self.edges.items():
            graph.add_edge(
                label_source(label),
                label_target(label),
                label=label,
                element=element,
                direction=label_direction(label),
            )
        return graph

    def face(self, p: int, q: int, base: str) -> CoxeterSquare:
        return CoxeterSquare(
            w=self.edges[edge_leaving(_set_bit(base, p), q)],
            x=self.edges[edge_leaving(base, p)],
            y=self.edges[edge_leaving(_set_bit(base, q), p)],
            z=self.edges[edge_leaving(base, q)],
        )

    def faces(self) -> Iterator[tuple[int, int, str, CoxeterSquare]]:
        for p, q in combinations(range(1, self.dimension + 1), 2):
            for base in vertices(self.dimension):
                if base[p - 1] == "0" and base[q - 1] == "0":
                    yield p, q, base, self.face(p, q, base)


def path_products(cube: CoxeterCube) -> Optional[dict[str, Permutation]]:
    """Product along paths from 0...0 to every vertex, or None if two paths disagree."""
    graph = cube.graph()
    start = "0" * cube.dimension
    products = {start: identity(cube.rank)}
    for vertex in nx.topological_sort(graph):
        if vertex == start:
            continue
        value: Optional[Permutation] = None
        for source, _, data in graph.in_edges(vertex, data=True):
            candidate = compose(data["element"], products[source])
            if value is None:
                value = candidate
            elif candidate != value:
                return None
        assert value is not None
        products[vertex] = value
    return products


def cube_validate(cube: CoxeterCube) -> bool:
    if any(element.is_identity() for element in cube.edges.values()):
        return False
    if path_products(cube) is None:
        return False
    for p, q, base, square in cube.faces():
        if not square_validate(square):
            logger.debug("Face (%s,%s) at %s is not a Coxeter square", p, q, base)
            return False
    return True


def _join_or_identity(rank: int, elements: Sequence[Permutation]) -> Permutation:
    return join(list(elements)) if elements else identity(rank)


def cube_from_terminal_edges(terminals: Sequence[Permutation]) -> Optional[CoxeterCube]:
    """Rebuild the cube whose terminal edges are ``terminals`` (direction order).

    The edge with ``*`` at k and zero set Z gets
    ``(join of x_i, i in Z)^-1 * (join of x_i, i in Z + {k})``.
    """
    if not terminals:
        raise InvalidCubeError("A cube needs at least one terminal edge")
    rank = same_rank(*terminals)
    dimension = len(terminals)
    joins: dict[frozenset[int], Permutation] = {}

    def joined(indices: frozenset[int]) -> Permutation:
        if indices not in joins:
            joins[indices] = _join_or_identity(rank, [terminals[i - 1] for i in sorted(indices)])
        return joins[indices]

    edges = {}
    for label in edge_labels(dimension):
        k = label_direction(label)
        zeros = frozenset(i for i, ch in enumerate(label, 1) if ch == "0")
        edges[label] = compose(joined(zeros).inverse(), joined(zeros | {k}))
    cube = CoxeterCube(dimension, edges)
    return cube if cube_validate(cube) else None


def cube_flip(cube: CoxeterCube, direction: int) -> CoxeterCube:
    """Reverse every edge parallel to ``direction``."""
    if not 1 <= direction <= cube.dimension:
        raise InvalidCubeError(f"Direction {direction} is outside 1..{cube.dimension}")
    edges = {}
    for label, element in cube.edges.items():
        if label_direction(label) == direction:
            edges[label] = element.inverse()
        else:
            edges[_toggle(label, direction)] = element
    return CoxeterCube(cube.dimension, edges)


def flip_terminal_set(
    terminals: Sequence[Permutation], chosen: Permutation
) -> frozenset[Permutation]:
    """Terminal edges after reversing the direction carrying ``chosen``."""
    inverse = chosen.inverse()
    flipped = {inverse}
    for element in terminals:
        if element != chosen:
            flipped.add(compose(inverse, join([element, chosen])))
    return frozenset(flipped)


def _order_key(terminals: frozenset[Permutation]) -> tuple:
    return tuple(element.sort_key() for element in sorted(terminals, key=Permutation.sort_key))


def flip_orbit(terminals: Sequence[Permutation]) -> set[frozenset[Permutation]]:
    """Every terminal set reachable by direction flips."""
    start = frozenset(terminals)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for chosen in current:
            flipped = flip_terminal_set(tuple(current), chosen)
            if flipped not in seen:
                seen.add(flipped)
                queue.append(flipped)
    return seen


def canonical_terminal_set(terminals: Sequence[Permutation]) -> TerminalEdgeSet:
    """Least terminal set in the flip orbit, sorted by (length, one-line notation)."""
    best = min(flip_orbit(terminals), key=_order_key)
    return tuple(sorted(best, key=Permutation.sort_key))


def cube_canonical(cube: CoxeterCube) -> TerminalEdgeSet:
    return canonical_terminal_set(cube.terminal_edges())


def _rebuild(terminals: Sequence[Permutation], what: str) -> CoxeterCube:
    cube = cube_from_terminal_edges(terminals)
    if cube is None:
        raise InvalidCubeError(f"{what} did not produce a valid cube")
    return cube


def cube_collapse(cube: CoxeterCube, i: int, j: int) -> CoxeterCube:
    """Merge directions i and j into one direction carrying x_i v x_j."""
    n = cube.dimension
    if n < 2 or i == j or not (1 <= i <= n and 1 <= j <= n):
        raise InvalidCubeError(f"Cannot collapse directions {i} and {j} of a {n}-cube")
    terminals = list(cube.terminal_edges())
    low, high = sorted((i, j))
    merged = join([terminals[low - 1], terminals[high - 1]])
    terminals[low - 1] = merged
    del terminals[high - 1]
    return _rebuild(terminals, "Collapse")


def _orthogonal(left: frozenset[int], right: frozenset[int]) -> bool:
    return all(abs(a - b) >= 2 for a in left for b in right)


def cube_support(cube: CoxeterCube) -> frozenset[int]:
    indices: frozenset[int] = frozenset()
    for element in cube.terminal_edges():
        indices |= support(element)
    return indices


def product_cube(first: CoxeterCube, second: CoxeterCube) -> CoxeterCube:
    """Cube whose terminal edges are those of both factors (first factor's directions first)."""
    same_rank(*first.terminal_edges(), *second.terminal_edges())
    if not _orthogonal(cube_support(first), cube_support(second)):
        raise InvalidCubeError(
            f"Generators {sorted(cube_support(first))} and {sorted(cube_support(second))} "
            "are not orthogonal"
        )
    return _rebuild(first.terminal_edges() + second.terminal_edges(), "Product")


def construct_inductive(rank: int, alpha_choices: Optional[Sequence[int]] = None) -> CoxeterCube:
    """Build a rank-dimensional cube by repeatedly adjoining nu(alpha, Pi_J).

    Each step conjugates the existing terminal edges by the new generator and
    adds the generator itself as the new terminal edge.
    """
    choices = list(alpha_choices) if alpha_choices is not None else list(range(1, rank + 1))
    if sorted(choices) != list(range(1, rank + 1)):
        raise InvalidCubeError(f"Choices {choices} must order the generators 1..{rank}")
    terminals = [simple_reflection(rank, choices[0])]
    used = {choices[0]}
    for alpha in choices[1:]:
        generator = nu(rank, alpha, used).element
        generator_inverse = generator.inverse()
        terminals = [compose(compose(generator, x), generator_inverse) for x in terminals]
        terminals.append(generator)
        used.add(alpha)
    return _rebuild(terminals, "Inductive construction")


def one_cube(element: Permutation) -> CoxeterCube:
    return CoxeterCube(1, {"*": element})
