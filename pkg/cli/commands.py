"""Command-line surface of coxeter-cubes.

``run_command`` parses an argument list, runs one subcommand and returns a
``CommandResult`` instead of printing, so it can be driven from tests.

Exit codes: 0 on success, 1 when the mathematics says no (invalid square,
no solution, any library error), 2 for usage errors and unreadable input.
"""

from __future__ import annotations

import argparse
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, NoReturn, Optional, Sequence

import numpy as np

from core.config import get_enumeration_bound, get_root_cap
from core.constants import DEFAULT_SAMPLES, DEFAULT_WORD_LENGTH
from core.cubes import (
    CoxeterSquare,
    canonical_terminal_set,
    cube_collapse,
    cube_flip,
    cube_from_terminal_edges,
    cube_validate,
    square_complete,
    square_reorient,
    square_validate,
)
from core.exceptions import BoundExceededError, CoxeterError, ParseError
from core.generic import (
    build_system,
    cocycle_identity_holds,
    inversion_set_generic,
    length_additivity_matches,
    reflection_cocycle,
)
from core.groupoid import decompose_morphism, morphism_of, nu
from core.rectangles import (
    SubtriangleInterval,
    compatible_subtriangles,
    flip_subtriangle,
    partition_to_tree,
    tree_canonical,
    tree_to_partition,
)
from core.services import CubeClassificationService
from core.transfer import TransferTriple, solve_transfers, transfer_image
from core.typea import Permutation
from core.types import RenderFormat, ReorientMove
from core.utils import (
    parse_cube,
    parse_elements,
    parse_index_set,
    parse_matrix,
    parse_partition,
    parse_tree,
    render,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    output: str = ""
    error: str = ""


class UsageError(Exception):
    """Raised instead of argparse's print-and-exit on bad arguments."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


# ----- Input helpers -----

def _read_document(value: str) -> str:
    """Inline JSON, or the contents of the file ``value`` names."""
    stripped = value.strip()
    if stripped.startswith(("{", "[")):
        return stripped
    path = Path(value)
    if not path.is_file():
        raise ParseError(f"{value!r} is neither inline JSON nor a readable file")
    return path.read_text(encoding="utf-8")


def _elements(args: argparse.Namespace, texts: Sequence[str]) -> list[Permutation]:
    return parse_elements(args.rank, list(texts))


def _format(args: argparse.Namespace, default: RenderFormat = RenderFormat.JSON) -> RenderFormat:
    return RenderFormat(args.format) if args.format else default


def _json(payload: object) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _check_bound(args: argparse.Namespace, rank: int) -> None:
    bound = args.bound if args.bound is not None else get_enumeration_bound()
    if rank > bound:
        raise BoundExceededError(rank, bound)


def _require_rank(args: argparse.Namespace) -> int:
    if args.rank is None:
        raise UsageError(f"{args.command}: --rank is required")
    return args.rank


# ----- square -----

def _square_check(args: argparse.Namespace) -> CommandResult:
    square = CoxeterSquare(*_elements(args, args.elements))
    valid = square_validate(square)
    return CommandResult(EXIT_OK if valid else EXIT_FAILURE, render(square, _format(args)))


def _square_complete(args: argparse.Namespace) -> CommandResult:
    x1, x2 = _elements(args, args.elements)
    square = square_complete(x1, x2)
    if square is None:
        return CommandResult(EXIT_FAILURE, error=f"{x1} and {x2} do not complete to a square")
    return CommandResult(EXIT_OK, render(square, _format(args)))


def _square_reorient(args: argparse.Namespace) -> CommandResult:
    square = CoxeterSquare(*_elements(args, args.elements))
    return CommandResult(EXIT_OK, render(square_reorient(square, args.move), _format(args)))


# ----- cube -----

def _cube_enumerate(args: argparse.Namespace) -> CommandResult:
    rank = _require_rank(args)
    _check_bound(args, rank)
    report = CubeClassificationService(enumeration_bound=args.bound).classify(rank)
    return CommandResult(EXIT_OK, render(report, RenderFormat.JSON))


def _cube_validate(args: argparse.Namespace) -> CommandResult:
    cube = parse_cube(_read_document(args.cube))
    valid = cube_validate(cube)
    return CommandResult(EXIT_OK if valid else EXIT_FAILURE, _json({"valid": valid}))


def _cube_from_edges(args: argparse.Namespace) -> CommandResult:
    terminals = _elements(args, args.elements)
    cube = cube_from_terminal_edges(terminals)
    if cube is None:
        return CommandResult(EXIT_FAILURE, error="Terminal edges do not span a Coxeter cube")
    return CommandResult(EXIT_OK, render(cube, _format(args)))


def _cube_flip(args: argparse.Namespace) -> CommandResult:
    cube = parse_cube(_read_document(args.cube))
    return CommandResult(EXIT_OK, render(cube_flip(cube, args.direction), _format(args)))


def _cube_canonical(args: argparse.Namespace) -> CommandResult:
    cube = parse_cube(_read_document(args.cube))
    canonical = cube_from_terminal_edges(canonical_terminal_set(cube.terminal_edges()))
    if canonical is None:
        return CommandResult(EXIT_FAILURE, error="Cube is not a valid Coxeter cube")
    return CommandResult(EXIT_OK, render(canonical, _format(args)))


def _cube_collapse(args: argparse.Namespace) -> CommandResult:
    cube = parse_cube(_read_document(args.cube))
    return CommandResult(EXIT_OK, render(cube_collapse(cube, args.i, args.j), _format(args)))


# ----- transfer -----

def _transfer_check(args: argparse.Namespace) -> CommandResult:
    triple = TransferTriple(*_elements(args, args.elements))
    return CommandResult(EXIT_OK if triple.holds else EXIT_FAILURE, render(triple, _format(args)))


def _transfer_image(args: argparse.Namespace) -> CommandResult:
    w, x = _elements(args, args.elements)
    y = transfer_image(w, x)
    if y is None:
        message = f"{w} does not carry Phi_{x} onto an inversion set"
        return CommandResult(EXIT_FAILURE, error=message)
    return CommandResult(EXIT_OK, render(y, _format(args)))


def _transfer_solve(args: argparse.Namespace) -> CommandResult:
    x, y = _elements(args, args.elements)
    solutions = sorted(solve_transfers(x, y), key=Permutation.sort_key)
    if not solutions:
        return CommandResult(EXIT_FAILURE, error=f"No w carries Phi_{x} onto Phi_{y}")
    return CommandResult(EXIT_OK, render(solutions, RenderFormat.JSON))


# ----- partition / tree -----

def _partition_to_tree(args: argparse.Namespace) -> CommandResult:
    partition = parse_partition(_read_document(args.partition))
    return CommandResult(EXIT_OK, render(partition_to_tree(partition), _format(args)))


def _partition_validate(args: argparse.Namespace) -> CommandResult:
    partition = parse_partition(_read_document(args.partition), validate=False)
    valid = partition.is_valid()
    payload: dict[str, object] = {"valid": valid}
    if valid:
        payload["compatibleSubtriangles"] = [
            [interval.a, interval.c] for interval in compatible_subtriangles(partition)
        ]
    return CommandResult(EXIT_OK if valid else EXIT_FAILURE, _json(payload))


def _partition_flip(args: argparse.Namespace) -> CommandResult:
    partition = parse_partition(_read_document(args.partition))
    bounds = sorted(parse_index_set(args.interval))
    if len(bounds) not in (1, 2):
        raise ParseError(f"Interval {args.interval!r} must be 'a,c' or 'a'")
    flipped = flip_subtriangle(partition, SubtriangleInterval(bounds[0], bounds[-1]))
    return CommandResult(EXIT_OK, render(flipped, _format(args)))


def _partition_show(args: argparse.Namespace) -> CommandResult:
    partition = parse_partition(_read_document(args.partition))
    return CommandResult(EXIT_OK, render(partition, _format(args, RenderFormat.ASCII)))


def _tree_to_partition(args: argparse.Namespace) -> CommandResult:
    tree = parse_tree(_read_document(args.tree))
    rank = args.rank if args.rank is not None else tree.leaves - 1
    return CommandResult(EXIT_OK, render(tree_to_partition(rank, tree), _format(args)))


def _tree_canonical(args: argparse.Namespace) -> CommandResult:
    tree = parse_tree(_read_document(args.tree))
    return CommandResult(EXIT_OK, render(tree_canonical(tree), _format(args)))


# ----- edge -----

def _edge_list(args: argparse.Namespace) -> CommandResult:
    rank = _require_rank(args)
    _check_bound(args, rank)
    report = CubeClassificationService(enumeration_bound=args.bound).edge_report(rank)
    return CommandResult(EXIT_OK, render(report, RenderFormat.JSON))


def _edge_count(args: argparse.Namespace) -> CommandResult:
    rank = _require_rank(args)
    _check_bound(args, rank)
    report = CubeClassificationService(enumeration_bound=args.bound).edge_report(rank)
    return CommandResult(EXIT_OK, _json({"rank": rank, "count": report.count}))


# ----- groupoid -----

def _nu(args: argparse.Namespace) -> CommandResult:
    rank = _require_rank(args)
    generator = nu(rank, args.alpha, parse_index_set(args.base))
    return CommandResult(EXIT_OK, render(generator, _format(args)))


def _decompose(args: argparse.Namespace) -> CommandResult:
    (element,) = _elements(args, [args.element])
    morphism = morphism_of(element, parse_index_set(args.source))
    generators = decompose_morphism(morphism)
    return CommandResult(EXIT_OK, render(generators, RenderFormat.JSON))


# ----- generic -----

def _generic_roots(args: argparse.Namespace) -> CommandResult:
    system = build_system(parse_matrix(_read_document(args.matrix)))
    cap = args.bound if args.bound is not None else get_root_cap()
    roots = system.generate_roots(cap)
    payload = {
        "size": system.size,
        "count": len(roots),
        "roots": sorted(list(root.key()) for root in roots),
    }
    return CommandResult(EXIT_OK, _json(payload))


def _generic_check_cocycle(args: argparse.Namespace) -> CommandResult:
    """Random word pairs: cocycle identity, length additivity and N(w) = cocycle."""
    system = build_system(parse_matrix(_read_document(args.matrix)))
    max_length = args.bound if args.bound is not None else DEFAULT_WORD_LENGTH
    rng = np.random.default_rng(args.seed)

    def random_word() -> tuple[int, ...]:
        size = int(rng.integers(0, max_length + 1))
        return tuple(int(s) for s in rng.integers(1, system.size + 1, size=size))

    failures = 0
    for _ in range(args.samples):
        x = system.evaluate_word(random_word())
        y = system.evaluate_word(random_word())
        if not (
            cocycle_identity_holds(system, x, y)
            and length_additivity_matches(system, x, y)
            and inversion_set_generic(system, x) == reflection_cocycle(system, x)
        ):
            failures += 1
            logger.warning("Cocycle check failed for %s and %s", x.defining_word, y.defining_word)
    payload = {"samples": args.samples, "failures": failures, "seed": args.seed}
    return CommandResult(EXIT_OK if failures == 0 else EXIT_FAILURE, _json(payload))


# ----- Parser -----

Handler = Callable[[argparse.Namespace], CommandResult]


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, default=None, help="rank n of A_n")
    common.add_argument(
        "--format",
        choices=[fmt.value for fmt in RenderFormat],
        default=None,
        help="output format (default depends on the command)",
    )
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument(
        "--bound", type=int, default=None, help="rank bound, root cap or word length"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _ArgumentParser(
        prog="coxeter-cubes",
        description="Coxeter squares, cubes and rectangle partitions in A_n",
    )
    parser.add_argument("--log-level", default=None, help="logging level override")
    groups = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    groups.required = True

    def group(name: str, help_text: str) -> argparse._SubParsersAction:
        sub = groups.add_parser(name, help=help_text)
        actions = sub.add_subparsers(dest="action", parser_class=_ArgumentParser)
        actions.required = True
        return actions

    def action(
        actions: argparse._SubParsersAction, name: str, handler: Handler, help_text: str
    ) -> argparse.ArgumentParser:
        sub = actions.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    square = group("square", "Coxeter squares")
    for name, handler, count in (
        ("check", _square_check, 4),
        ("reorient", _square_reorient, 4),
        ("complete", _square_complete, 2),
    ):
        sub = action(square, name, handler, f"{name} a square")
        sub.add_argument("elements", nargs=count, help="elements: [3,1,2] or 's2 s1'")
        if name == "reorient":
            sub.add_argument(
                "--move", required=True, choices=[move.value for move in ReorientMove]
            )

    cube = group("cube", "Coxeter n-cubes")
    action(cube, "enumerate", _cube_enumerate, "count cube classes of A_n")
    action(cube, "validate", _cube_validate, "validate a cube document").add_argument("cube")
    action(cube, "from-edges", _cube_from_edges, "rebuild a cube").add_argument(
        "elements", nargs="+"
    )
    flip = action(cube, "flip", _cube_flip, "reverse one direction")
    flip.add_argument("cube")
    flip.add_argument("--direction", type=int, required=True)
    action(cube, "canonical", _cube_canonical, "canonical orientation").add_argument("cube")
    collapse = action(cube, "collapse", _cube_collapse, "merge two directions")
    collapse.add_argument("cube")
    collapse.add_argument("i", type=int)
    collapse.add_argument("j", type=int)

    transfer = group("transfer", "the equation w(Phi_x) = Phi_y")
    action(transfer, "check", _transfer_check, "check w, x, y").add_argument(
        "elements", nargs=3
    )
    action(transfer, "image", _transfer_image, "y from w and x").add_argument(
        "elements", nargs=2
    )
    action(transfer, "solve", _transfer_solve, "every w for x, y").add_argument(
        "elements", nargs=2
    )

    partition = group("partition", "based rectangle partitions")
    for name, handler in (
        ("to-tree", _partition_to_tree),
        ("validate", _partition_validate),
        ("show", _partition_show),
    ):
        action(partition, name, handler, f"partition {name}").add_argument("partition")
    pflip = action(partition, "flip", _partition_flip, "flip a compatible subtriangle")
    pflip.add_argument("partition")
    pflip.add_argument("--interval", required=True, help="a,c")

    tree = group("tree", "binary trees")
    action(tree, "to-partition", _tree_to_partition, "tree to partition").add_argument("tree")
    action(tree, "canonical", _tree_canonical, "canonical unordered form").add_argument("tree")

    edge = group("edge", "edge elements of cubes")
    action(edge, "list", _edge_list, "list edge elements")
    action(edge, "count", _edge_count, "count edge elements")

    nu_parser = groups.add_parser("nu", parents=[common], help="groupoid generator nu")
    nu_parser.add_argument("--alpha", type=int, required=True)
    nu_parser.add_argument("--base", default="", help="index set, e.g. 1,3")
    nu_parser.set_defaults(handler=_nu, action=None)

    decompose = groups.add_parser("decompose", parents=[common], help="factor a morphism")
    decompose.add_argument("element")
    decompose.add_argument("--source", default="", help="index set J of the source Pi_J")
    decompose.set_defaults(handler=_decompose, action=None)

    generic = group("generic", "numeric engine for any Coxeter matrix")
    action(generic, "roots", _generic_roots, "positive roots").add_argument("matrix")
    cocycle = action(generic, "check-cocycle", _generic_check_cocycle, "random cocycle checks")
    cocycle.add_argument("matrix")
    cocycle.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)

    return parser


def run_command(
    argv: Sequence[str], parser: Optional[argparse.ArgumentParser] = None
) -> CommandResult:
    parser = parser or build_parser()
    try:
        args = parser.parse_args(list(argv))
        return args.handler(args)
    except (UsageError, ParseError) as exc:
        return CommandResult(EXIT_USAGE, error=str(exc))
    except CoxeterError as exc:
        logger.debug("Command %s failed", list(argv), exc_info=True)
        return CommandResult(EXIT_FAILURE, error=str(exc))
    except ValueError as exc:
        return CommandResult(EXIT_USAGE, error=str(exc))
    except SystemExit as exc:
        # --help prints and exits through argparse
        code = exc.code if isinstance(exc.code, int) else EXIT_OK
        return CommandResult(code)
