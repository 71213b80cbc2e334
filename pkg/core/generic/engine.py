"""Numeric canonical representation of an arbitrary Coxeter system.

Roots are coefficient vectors over the simple roots. A simple reflection acts
on column vectors through ``M_s = I - 2 e_s e_s^T B`` where ``B`` is the Coxeter
form ``B(a_s, a_t) = -cos(pi / m(s, t))`` (``-1`` when ``m = inf``).

Orders are stored as integers with ``0`` meaning infinity. Generators are
numbered from 1 in words, like the type-A engine.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from core.config import get_root_cap
from core.constants import EPSILON, INFINITY, KEY_DECIMALS
from core.exceptions import InvalidElementError, MalformedMatrixError, RootCapExceededError
from core.typea.permutations import Word
from core.types import CoxeterMatrixDocument

logger = logging.getLogger(__name__)


def _vector_key(vector: np.ndarray) -> tuple[float, ...]:
    return tuple(float(v) for v in np.round(vector, KEY_DECIMALS) + 0.0)


def _is_positive(vector: np.ndarray) -> bool:
    return bool(np.all(vector >= -EPSILON))


def _is_negative(vector: np.ndarray) -> bool:
    return bool(np.all(vector <= EPSILON))


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of orders m(s, t); ``0`` encodes infinity."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        size = len(rows)
        if size == 0:
            raise MalformedMatrixError("Coxeter matrix must have at least one generator")
        for i, row in enumerate(rows):
            if len(row) != size:
                raise MalformedMatrixError("Coxeter matrix must be square")
            if row[i] != 1:
                raise MalformedMatrixError(f"Diagonal entry m({i + 1},{i + 1}) must be 1")
            for j, order in enumerate(row):
                if order != rows[j][i]:
                    raise MalformedMatrixError("Coxeter matrix must be symmetric")
                if i != j and order != INFINITY and order < 2:
                    raise MalformedMatrixError(
                        f"Off-diagonal entry m({i + 1},{j + 1})={order} must be >= 2 or 0 (inf)"
                    )

    @property
    def size(self) -> int:
        return len(self.entries)

    def order(self, s: int, t: int) -> int:
        return self.entries[s - 1][t - 1]

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=int)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "CoxeterMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_document(cls, document: CoxeterMatrixDocument) -> "CoxeterMatrix":
        if document.size != len(document.m):
            raise MalformedMatrixError(
                f"Matrix has {len(document.m)} rows, document says {document.size}"
            )
        return cls.from_rows(document.m)

    @classmethod
    def type_a(cls, rank: int) -> "CoxeterMatrix":
        return cls.from_rows(_path_matrix(rank, {}))

    @classmethod
    def type_b(cls, rank: int) -> "CoxeterMatrix":
        """B_n with the order-4 bond between generators 1 and 2."""
        if rank < 2:
            raise MalformedMatrixError("B_n needs at least two generators")
        return cls.from_rows(_path_matrix(rank, {(1, 2): 4}))

    @classmethod
    def dihedral(cls, order: int) -> "CoxeterMatrix":
        """I_2(m); ``order=0`` gives the infinite dihedral group."""
        return cls.from_rows([[1, order], [order, 1]])


def _path_matrix(rank: int, bonds: dict[tuple[int, int], int]) -> list[list[int]]:
    rows = [[2] * rank for _ in range(rank)]
    for i in range(rank):
        rows[i][i] = 1
        if i + 1 < rank:
            order = bonds.get((i + 1, i + 2), 3)
            rows[i][i + 1] = rows[i + 1][i] = order
    return rows


@dataclass(frozen=True)
class GenericRoot:
    coefficients: tuple[float, ...]

    @property
    def is_positive(self) -> bool:
        return _is_positive(self.vector())

    @property
    def is_negative(self) -> bool:
        return _is_negative(self.vector())

    def vector(self) -> np.ndarray:
        return np.array(self.coefficients, dtype=float)

    def key(self) -> tuple[float, ...]:
        return _vector_key(self.vector())

    def __str__(self) -> str:
        return "(" + ", ".join(f"{c:g}" for c in self.coefficients) + ")"


@dataclass(frozen=True, eq=False)
class GenericElement:
    """Element stored by the images of the simple roots (the columns of ``matrix``)."""

    matrix: np.ndarray
    defining_word: Word

    @property
    def simple_images(self) -> list[GenericRoot]:
        return [GenericRoot(tuple(float(v) for v in column)) for column in self.matrix.T]

    def key(self) -> tuple[float, ...]:
        return _vector_key(self.matrix.ravel())

    def is_identity(self) -> bool:
        return bool(np.allclose(self.matrix, np.identity(len(self.matrix)), atol=EPSILON))

    def apply(self, vector: np.ndarray) -> np.ndarray:
        return self.matrix @ vector

    def __mul__(self, other: "GenericElement") -> "GenericElement":
        return GenericElement(self.matrix @ other.matrix, self.defining_word + other.defining_word)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GenericElement):
            return NotImplemented
        return bool(np.allclose(self.matrix, other.matrix, atol=EPSILON))

    __hash__ = None  # type: ignore[assignment]


class GenericSystem:
    """A Coxeter system realized through its canonical representation."""

    def __init__(self, matrix: CoxeterMatrix):
        self.matrix = matrix
        self.size = matrix.size
        orders = matrix.to_array().astype(float)
        orders[orders <= 0] = 0.5
        self.form = -np.cos(np.pi / orders)
        self._reflections = []
        for s in range(self.size):
            basis = np.zeros(self.size)
            basis[s] = 1.0
            self._reflections.append(
                np.identity(self.size) - 2.0 * np.outer(basis, basis) @ self.form
            )
        self._roots: Optional[list[GenericRoot]] = None
        self._root_index: dict[tuple[float, ...], GenericRoot] = {}
        self._root_matrix: Optional[np.ndarray] = None

    def form_value(self, s: int, t: int) -> float:
        return float(self.form[s - 1, t - 1])

    def reflection_matrix(self, s: int) -> np.ndarray:
        if not 1 <= s <= self.size:
            raise InvalidElementError(f"Generator index {s} is outside 1..{self.size}")
        return self._reflections[s - 1]

    def simple_root(self, s: int) -> np.ndarray:
        vector = np.zeros(self.size)
        vector[s - 1] = 1.0
        return vector

    def identity(self) -> GenericElement:
        return GenericElement(np.identity(self.size), ())

    def evaluate_word(self, word: Sequence[int]) -> GenericElement:
        matrix = np.identity(self.size)
        for letter in word:
            matrix = matrix @ self.reflection_matrix(letter)
        return GenericElement(matrix, tuple(word))

    def inverse(self, element: GenericElement) -> GenericElement:
        return self.evaluate_word(tuple(reversed(element.defining_word)))

    # ----- Roots -----

    def generate_roots(self, cap: Optional[int] = None) -> list[GenericRoot]:
        """Positive roots, found by reflecting simple roots until the orbit closes.

        ``cap`` bounds the number of positive roots; finding one more raises
        RootCapExceededError.
        """
        limit = cap if cap is not None else get_root_cap()
        if limit < self.size:
            raise ValueError(f"Root cap {limit} is smaller than the number of generators")
        if self._roots is not None and len(self._roots) <= limit:
            return list(self._roots)

        found: dict[tuple[float, ...], np.ndarray] = {}
        queue: deque[np.ndarray] = deque()
        for s in range(1, self.size + 1):
            root = self.simple_root(s)
            found[_vector_key(root)] = root
            queue.append(root)
        while queue:
            root = queue.popleft()
            for s in range(1, self.size + 1):
                image = self._reflections[s - 1] @ root
                if not _is_positive(image):
                    continue
                key = _vector_key(image)
                if key in found:
                    continue
                found[key] = image
                if len(found) > limit:
                    raise RootCapExceededError(limit)
                queue.append(image)

        roots = [GenericRoot(tuple(float(v) for v in vector)) for vector in found.values()]
        self._roots = roots
        self._root_index = {root.key(): root for root in roots}
        self._root_matrix = np.array([root.coefficients for root in roots], dtype=float).T
        logger.debug("Generated %s positive roots for a rank-%s system", len(roots), self.size)
        return list(roots)

    def canonical_root(self, vector: np.ndarray) -> GenericRoot:
        """Snap ``vector`` (up to sign) onto the generated positive root it approximates."""
        self._ensure_roots()
        candidate = vector if _is_positive(vector) else -vector
        root = self._root_index.get(_vector_key(candidate))
        if root is not None:
            return root
        for root in self._roots or ():
            if np.allclose(root.vector(), candidate, atol=EPSILON):
                return root
        raise InvalidElementError(f"{candidate} is not a root of this system")

    def _ensure_roots(self) -> np.ndarray:
        if self._root_matrix is None:
            self.generate_roots()
        assert self._root_matrix is not None
        return self._root_matrix

    # ----- Inversion sets -----

    def _negative_columns(self, matrix: np.ndarray) -> list[int]:
        roots = self._ensure_roots()
        images = matrix @ roots
        return [i for i in range(images.shape[1]) if _is_negative(images[:, i])]

    def inversion_set(self, element: GenericElement) -> frozenset[GenericRoot]:
        """Positive roots sent negative by the inverse of ``element``."""
        self._ensure_roots()
        inverse_matrix = np.linalg.inv(element.matrix)
        roots = self._roots or []
        return frozenset(roots[i] for i in self._negative_columns(inverse_matrix))

    def length(self, element: GenericElement) -> int:
        return len(self.inversion_set(element))

    def reflection_along(self, root: GenericRoot) -> np.ndarray:
        """Matrix of t_beta: v -> v - 2 B(v, beta) beta."""
        beta = root.vector()
        return np.identity(self.size) - 2.0 * np.outer(beta, self.form @ beta)

    def reflection_cocycle(self, element: GenericElement) -> frozenset[GenericRoot]:
        """Roots of the reflections t with l(t w) < l(w)."""
        roots = self._roots if self._roots is not None else self.generate_roots()
        base_length = self.length(element)
        inverse_matrix = np.linalg.inv(element.matrix)
        cocycle = []
        for root in roots:
            # (t w)^-1 = w^-1 t since t is an involution
            shorter = len(self._negative_columns(inverse_matrix @ self.reflection_along(root)))
            if shorter < base_length:
                cocycle.append(root)
        return frozenset(cocycle)

    def conjugate_roots(
        self, element: GenericElement, roots: Iterable[GenericRoot]
    ) -> frozenset[GenericRoot]:
        """Root encoding of ``x N x^-1``: each root mapped by x, sign dropped."""
        return frozenset(self.canonical_root(element.apply(root.vector())) for root in roots)

    def word_inversion_roots(self, word: Sequence[int]) -> list[GenericRoot]:
        """Roots beta_k = s_1 ... s_(k-1)(alpha_k); usable in infinite systems."""
        prefix = np.identity(self.size)
        roots = []
        for letter in word:
            roots.append(GenericRoot(tuple(float(v) for v in prefix @ self.simple_root(letter))))
            prefix = prefix @ self.reflection_matrix(letter)
        return roots

    # ----- Searches -----

    def reduced_words_up_to(self, max_length: int) -> list[GenericElement]:
        """Every element of length <= ``max_length`` with one reduced word each."""
        start = self.identity()
        seen = {start.key()}
        elements = [start]
        frontier = [start]
        for _ in range(max_length):
            next_frontier = []
            for element in frontier:
                for s in range(1, self.size + 1):
                    if not _is_positive(element.matrix[:, s - 1]):
                        continue
                    step = GenericElement(
                        element.matrix @ self._reflections[s - 1],
                        element.defining_word + (s,),
                    )
                    key = step.key()
                    if key not in seen:
                        seen.add(key)
                        elements.append(step)
                        next_frontier.append(step)
            frontier = next_frontier
        return elements


def build_system(matrix: CoxeterMatrix | Sequence[Sequence[int]]) -> GenericSystem:
    if not isinstance(matrix, CoxeterMatrix):
        matrix = CoxeterMatrix.from_rows(matrix)
    return GenericSystem(matrix)


def generate_roots(system: GenericSystem, cap: Optional[int] = None) -> list[GenericRoot]:
    return system.generate_roots(cap)


def evaluate_word(system: GenericSystem, word: Sequence[int]) -> GenericElement:
    return system.evaluate_word(word)


def inversion_set_generic(system: GenericSystem, element: GenericElement) -> frozenset[GenericRoot]:
    return system.inversion_set(element)


def reflection_cocycle(system: GenericSystem, element: GenericElement) -> frozenset[GenericRoot]:
    return system.reflection_cocycle(element)


def cocycle_identity_holds(system: GenericSystem, x: GenericElement, y: GenericElement) -> bool:
    """N(xy) = N(x) symmetric-difference x N(y) x^-1."""
    left = system.inversion_set(x * y)
    right = system.inversion_set(x) ^ system.conjugate_roots(x, system.inversion_set(y))
    return left == right


def length_additivity_matches(
    system: GenericSystem, x: GenericElement, y: GenericElement
) -> bool:
    """l(xy) = l(x) + l(y) exactly when N(xy) is the disjoint union N(x) + x N(y) x^-1."""
    n_x = system.inversion_set(x)
    conjugated = system.conjugate_roots(x, system.inversion_set(y))
    additive = system.length(x * y) == len(n_x) + len(system.inversion_set(y))
    disjoint_union = not (n_x & conjugated) and system.inversion_set(x * y) == n_x | conjugated
    return additive == disjoint_union


def transfer_check_generic(
    system: GenericSystem,
    w: GenericElement,
    x: GenericElement,
    y: GenericElement,
) -> bool:
    """w maps the inversion roots of x onto those of y, all images positive."""
    images = []
    for root in system.word_inversion_roots(x.defining_word):
        image = w.apply(root.vector())
        if not _is_positive(image):
            return False
        images.append(_vector_key(image))
    target = {root.key() for root in system.word_inversion_roots(y.defining_word)}
    return len(images) == len(target) and set(images) == target


def bounded_square_search(
    system: GenericSystem, max_length: int
) -> list[tuple[GenericElement, GenericElement, GenericElement, GenericElement]]:
    """All squares (w, x, y, z) whose four edges have length <= ``max_length``."""
    elements = system.reduced_words_up_to(max_length)
    by_key = {element.key(): element for element in elements}
    by_roots: dict[frozenset[tuple[float, ...]], GenericElement] = {}
    for element in elements:
        keys = frozenset(root.key() for root in system.word_inversion_roots(element.defining_word))
        by_roots[keys] = element

    squares = []
    non_identity = [element for element in elements if element.defining_word]
    for x in non_identity:
        x_roots = system.word_inversion_roots(x.defining_word)
        for w in non_identity:
            images = [w.apply(root.vector()) for root in x_roots]
            if not all(_is_positive(image) for image in images):
                continue
            y = by_roots.get(frozenset(_vector_key(image) for image in images))
            if y is None or not y.defining_word:
                continue
            z_matrix = system.inverse(y).matrix @ w.matrix @ x.matrix
            z = by_key.get(_vector_key(z_matrix.ravel()))
            if z is None or z.is_identity():
                continue
            squares.append((w, x, y, z))
    logger.debug(
        "Bounded square search over %s elements found %s squares", len(elements), len(squares)
    )
    return squares
