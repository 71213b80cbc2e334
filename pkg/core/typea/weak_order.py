"""Right weak order on A_n: comparisons, joins, meets and lower intervals."""

from __future__ import annotations

import logging
from collections import deque
from typing import Iterable, Sequence

import networkx as nx

from core.typea.permutations import (
    Permutation,
    all_permutations,
    compose,
    longest_element,
    same_rank,
    simple_reflection,
    identity,
)
from core.typea.roots import (
    PositiveRoot,
    RootSet,
    act,
    inversion_set,
    permutation_from_inversion_set,
    simple_root,
)

logger = logging.getLogger(__name__)


def leq_weak_right(x: Permutation, y: Permutation) -> bool:
    """x <=_R y iff the inversion set of x is contained in that of y."""
    same_rank(x, y)
    return inversion_set(x) <= inversion_set(y)


def transitive_closure(roots: Iterable[PositiveRoot]) -> RootSet:
    """Close a root set under (i, j), (j, k) => (i, k)."""
    closed = set(roots)
    changed = True
    while changed:
        changed = False
        by_lo: dict[int, list[int]] = {}
        for root in closed:
            by_lo.setdefault(root.lo, []).append(root.hi)
        for root in list(closed):
            for hi in by_lo.get(root.hi, ()):
                candidate = PositiveRoot(root.lo, hi)
                if candidate not in closed:
                    closed.add(candidate)
                    changed = True
    return frozenset(closed)


def join(elements: Sequence[Permutation]) -> Permutation:
    """Least upper bound in the right weak order."""
    if not elements:
        raise ValueError("join requires at least one element")
    rank = same_rank(*elements)
    union: set[PositiveRoot] = set()
    for element in elements:
        union |= inversion_set(element)
    return permutation_from_inversion_set(rank, transitive_closure(union))


def meet(elements: Sequence[Permutation]) -> Permutation:
    """Greatest lower bound, obtained from the join through w0."""
    if not elements:
        raise ValueError("meet requires at least one element")
    rank = same_rank(*elements)
    w0 = longest_element(rank)
    return compose(w0, join([compose(w0, element) for element in elements]))


def lower_interval(v: Permutation) -> list[Permutation]:
    """Every z with z <=_R v, in breadth-first order from the identity.

    From z the walk steps to z*s_i whenever z(alpha_i) is a positive root of
    the inversion set of v.
    """
    rank = v.rank
    target = inversion_set(v)
    start = identity(rank)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        z = queue.popleft()
        for i in range(1, rank + 1):
            image = act(z, simple_root(i))
            if image.positive and image.root in target:
                step = compose(z, simple_reflection(rank, i))
                if step not in seen:
                    seen.add(step)
                    order.append(step)
                    queue.append(step)
    logger.debug("Lower interval of %s has %s elements", v, len(order))
    return order


def weak_order_graph(rank: int) -> nx.DiGraph:
    """Hasse diagram of the right weak order: edges z -> z*s_i with length + 1."""
    graph = nx.DiGraph()
    for z in all_permutations(rank):
        graph.add_node(z)
        for i in range(1, rank + 1):
            if act(z, simple_root(i)).positive:
                graph.add_edge(z, compose(z, simple_reflection(rank, i)), generator=i)
    return graph
