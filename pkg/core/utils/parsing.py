"""Text and JSON input for elements, roots, cubes, partitions, trees and matrices."""

from __future__ import annotations

import json
import re
from typing import Optional

from pydantic import ValidationError

from core.constants import IDENTITY_TOKENS
from core.cubes import CoxeterCube
from core.exceptions import CoxeterError, ParseError
from core.generic import CoxeterMatrix
from core.rectangles import (
    BasedRectangle,
    BinaryTree,
    RectanglePartition,
    from_nested,
    partition_from_triples,
)
from core.typea import Permutation, PositiveRoot, from_word, identity, same_rank
from core.types import (
    CoxeterMatrixDocument,
    CubeDocument,
    PartitionDocument,
    PermutationDocument,
    TreeDocument,
)

_LETTER_RE = re.compile(r"^s?(\d+)$")
_ROOT_PAIR_RE = re.compile(r"^\(\s*(\d+)\s*,\s*(\d+)\s*\)$")
_SIMPLE_SUM_RE = re.compile(r"^a(\d+)$")


def parse_word(text: str) -> tuple[int, ...]:
    """Read ``s2 s1``, ``s2*s1`` or ``2 1`` as a tuple of generator indices."""
    tokens = [token for token in re.split(r"[\s*·]+", text.strip()) if token]
    letters = []
    for token in tokens:
        match = _LETTER_RE.match(token)
        if match is None:
            raise ParseError(f"Cannot read {token!r} as a simple reflection")
        letters.append(int(match.group(1)))
    return tuple(letters)


def parse_element(rank: Optional[int], text: str) -> Permutation:
    """Parse one-line notation ``[3,1,2]``, a permutation document or a word.

    Words need ``rank``; ``e`` and ``id`` are the identity and a bare digit is a
    generator.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("Empty element")
    if stripped.startswith("{"):
        element = parse_permutation(stripped)
        if rank is not None and element.rank != rank:
            raise ParseError(f"{element} has rank {element.rank}, expected {rank}")
        return element
    if stripped.startswith("["):
        try:
            values = json.loads(stripped)
            element = Permutation(tuple(int(v) for v in values))
        except (json.JSONDecodeError, TypeError, ValueError) as exc:
            raise ParseError(f"Cannot read {stripped!r} in one-line notation: {exc}") from exc
        if rank is not None and element.rank != rank:
            raise ParseError(f"{element} has rank {element.rank}, expected {rank}")
        return element
    if rank is None:
        raise ParseError(f"A rank is needed to read the word {stripped!r}")
    if stripped.lower() in IDENTITY_TOKENS:
        return identity(rank)
    try:
        return from_word(rank, parse_word(stripped))
    except CoxeterError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def parse_elements(rank: Optional[int], texts: list[str]) -> list[Permutation]:
    elements = [parse_element(rank, text) for text in texts]
    if elements:
        try:
            same_rank(*elements)
        except CoxeterError as exc:
            raise ParseError(str(exc)) from exc
    return elements


def parse_permutation(text: str) -> Permutation:
    """Read a permutation document; a ``word``, when present, must evaluate to ``image``."""
    try:
        document = PermutationDocument.model_validate(_load_json(text))
    except ValidationError as exc:
        raise ParseError(f"Invalid permutation document: {exc}") from exc
    try:
        element = Permutation(tuple(document.image))
        if element.rank != document.rank:
            raise ParseError(
                f"{element} has rank {element.rank}, document says {document.rank}"
            )
        word_given = "word" in document.model_fields_set
        if word_given and from_word(document.rank, document.word) != element:
            raise ParseError(f"Word {document.word} does not evaluate to {element}")
    except ParseError:
        raise
    except CoxeterError as exc:
        raise ParseError(str(exc)) from exc
    return element


def parse_root(text: str) -> PositiveRoot:
    """Read ``(i,j)`` or a run of simple roots such as ``a2+a3``."""
    stripped = text.strip().replace(" ", "")
    try:
        match = _ROOT_PAIR_RE.match(stripped)
        if match:
            return PositiveRoot(int(match.group(1)), int(match.group(2)))
        indices = []
        for term in stripped.split("+"):
            simple = _SIMPLE_SUM_RE.match(term)
            if simple is None:
                raise ParseError(f"Cannot read {text!r} as a root")
            indices.append(int(simple.group(1)))
        indices.sort()
        if indices != list(range(indices[0], indices[0] + len(indices))):
            raise ParseError(f"{text!r} is not a sum of consecutive simple roots")
        return PositiveRoot(indices[0], indices[-1] + 1)
    except ParseError:
        raise
    except CoxeterError as exc:
        raise ParseError(str(exc)) from exc


def parse_index_set(text: str) -> frozenset[int]:
    """Read ``1,3`` (optionally braced) as a set of generator indices."""
    stripped = text.strip().strip("{}[]").strip()
    if not stripped:
        return frozenset()
    try:
        return frozenset(int(part) for part in stripped.split(",") if part.strip())
    except ValueError as exc:
        raise ParseError(f"Cannot read {text!r} as an index set") from exc


def _load_json(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"Invalid JSON: {exc.msg}") from exc


def parse_cube(text: str) -> CoxeterCube:
    """Read a cube document; the dimension is the label length."""
    try:
        document = CubeDocument.model_validate(_load_json(text))
    except ValidationError as exc:
        raise ParseError(f"Invalid cube document: {exc}") from exc
    if not document.edges:
        raise ParseError("A cube document needs at least one edge")
    dimension = len(next(iter(document.edges)))
    try:
        edges = {label: Permutation(tuple(image)) for label, image in document.edges.items()}
        cube = CoxeterCube(dimension, edges)
    except CoxeterError as exc:
        raise ParseError(str(exc)) from exc
    if cube.rank != document.rank:
        raise ParseError(f"Cube edges have rank {cube.rank}, document says {document.rank}")
    return cube


def parse_partition(text: str, validate: bool = True) -> RectanglePartition:
    """Read a partition document, by default requiring it to partition the positive roots."""
    try:
        document = PartitionDocument.model_validate(_load_json(text))
    except ValidationError as exc:
        raise ParseError(f"Invalid partition document: {exc}") from exc
    for triple in document.rectangles:
        if len(triple) != 3:
            raise ParseError(f"Rectangle {triple} needs three entries (lo, base, hi)")
    if validate:
        return partition_from_triples(document.rank, document.rectangles)
    try:
        rectangles = frozenset(BasedRectangle(*triple) for triple in document.rectangles)
        return RectanglePartition(document.rank, rectangles)
    except CoxeterError as exc:
        raise ParseError(str(exc)) from exc


def parse_tree(text: str) -> BinaryTree:
    """Read ``{"tree": ...}`` or a bare nested array."""
    payload = _load_json(text)
    if isinstance(payload, dict):
        try:
            payload = TreeDocument.model_validate(payload).tree
        except ValidationError as exc:
            raise ParseError(f"Invalid tree document: {exc}") from exc
    return from_nested(payload)


def parse_matrix(text: str) -> CoxeterMatrix:
    """Read ``{"size": n, "m": [[...]]}`` or a bare list of rows; 0 is infinity."""
    payload = _load_json(text)
    if isinstance(payload, list):
        payload = {"size": len(payload), "m": payload}
    try:
        document = CoxeterMatrixDocument.model_validate(payload)
    except ValidationError as exc:
        raise ParseError(f"Invalid Coxeter matrix document: {exc}") from exc
    if document.size != len(document.m):
        raise ParseError(f"Matrix has {len(document.m)} rows, document says {document.size}")
    return CoxeterMatrix.from_document(document)
