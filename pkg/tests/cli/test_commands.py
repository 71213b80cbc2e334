"""Tests for the command-line surface."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

import core.config as config
from cli.commands import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, run_command
from cli.main import main
from core.cubes import CoxeterCube
from core.utils import render_json

A4_PARTITION = json.dumps(
    {"rank": 4, "rectangles": [[1, 4, 5], [1, 1, 4], [2, 3, 4], [2, 2, 3]]}
)


def run_json(argv: list[str]) -> object:
    result = run_command(argv)
    assert result.exit_code == EXIT_OK, result.error
    return json.loads(result.output)


class TestSquareAndTransfer:
    def test_valid_square(self) -> None:
        result = run_command(["square", "check", "--rank", "2", "s1 s2", "s1", "s2", "s1 s2"])
        assert result.exit_code == EXIT_OK
        assert json.loads(result.output)["valid"] is True

    def test_invalid_square(self) -> None:
        result = run_command(["square", "check", "--rank", "2", "s1", "s1", "s2", "s2"])
        assert result.exit_code == EXIT_FAILURE

    def test_complete(self) -> None:
        payload = run_json(["square", "complete", "--rank", "2", "s1", "s2 s1"])
        assert payload["z"] == [1, 3, 2]
        result = run_command(["square", "complete", "--rank", "2", "s1", "s2"])
        assert result.exit_code == EXIT_FAILURE
        assert result.error

    def test_reorient(self) -> None:
        payload = run_json(
            ["square", "reorient", "--rank", "2", "--move", "diagonal",
             "s1 s2", "s1", "s2", "s1 s2"]
        )
        assert payload["w"] == [1, 3, 2]

    def test_transfer_image(self) -> None:
        payload = run_json(["transfer", "image", "[2,3,1]", "[2,1,3]"])
        assert payload["image"] == [1, 3, 2]
        result = run_command(["transfer", "image", "--rank", "2", "s1", "s2"])
        assert result.exit_code == EXIT_FAILURE

    def test_transfer_solve(self) -> None:
        payload = run_json(["transfer", "solve", "--rank", "2", "s1", "s2"])
        assert [item["image"] for item in payload] == [[2, 3, 1]]

    def test_transfer_check(self) -> None:
        result = run_command(["transfer", "check", "--rank", "2", "s1 s2", "s1", "s2"])
        assert result.exit_code == EXIT_OK
        assert json.loads(result.output)["holds"] is True


class TestCubes:
    def test_enumerate(self) -> None:
        payload = run_json(["cube", "enumerate", "--rank", "3"])
        assert payload["count"] == 2
        assert payload["bruteForceCount"] == 2

    def test_enumerate_bound(self) -> None:
        result = run_command(["cube", "enumerate", "--rank", "4", "--bound", "3"])
        assert result.exit_code == EXIT_FAILURE
        assert "bound" in result.error

    def test_bound_flag_overrides_configured_bound(
        self, monkeypatch: pytest.MonkeyPatch, reset_config_state: None
    ) -> None:
        monkeypatch.setenv(config.ENUMERATION_BOUND_KEY, "3")
        assert run_command(["cube", "enumerate", "--rank", "4"]).exit_code == EXIT_FAILURE
        assert run_json(["cube", "enumerate", "--rank", "4", "--bound", "4"])["count"] == 3
        assert run_json(["edge", "count", "--rank", "4", "--bound", "4"]) == {
            "rank": 4,
            "count": 20,
        }

    def test_enumerate_needs_rank(self) -> None:
        assert run_command(["cube", "enumerate"]).exit_code == EXIT_USAGE

    def test_from_edges_and_validate(self, tmp_path: Path) -> None:
        result = run_command(["cube", "from-edges", "--rank", "3", "s3", "s2 s3", "s1 s2 s3"])
        assert result.exit_code == EXIT_OK
        path = tmp_path / "cube.json"
        path.write_text(result.output, encoding="utf-8")
        assert run_json(["cube", "validate", str(path)]) == {"valid": True}

    def test_from_edges_failure(self) -> None:
        result = run_command(["cube", "from-edges", "--rank", "2", "s1", "s1 s2"])
        assert result.exit_code == EXIT_FAILURE

    def test_flip_canonical_collapse(self, left_a3_cube: CoxeterCube) -> None:
        document = render_json(left_a3_cube)
        flipped = run_json(["cube", "flip", document, "--direction", "1"])
        assert flipped["edges"]["*11"] == [1, 2, 4, 3]
        canonical = run_command(["cube", "canonical", document, "--format", "dot"])
        assert canonical.exit_code == EXIT_OK
        assert canonical.output.startswith("digraph cube {")
        collapsed = run_json(["cube", "collapse", document, "1", "2"])
        assert collapsed["edges"]["*1"] == [1, 4, 3, 2]

    def test_missing_file(self, tmp_path: Path) -> None:
        result = run_command(["cube", "validate", str(tmp_path / "nope.json")])
        assert result.exit_code == EXIT_USAGE


class TestPartitionsAndTrees:
    def test_validate(self) -> None:
        payload = run_json(["partition", "validate", A4_PARTITION])
        assert payload == {
            "valid": True,
            "compatibleSubtriangles": [[1, 3], [1, 4], [2, 2], [2, 3]],
        }

    def test_validate_invalid(self) -> None:
        document = json.dumps({"rank": 2, "rectangles": [[1, 1, 2], [2, 2, 3]]})
        result = run_command(["partition", "validate", document])
        assert result.exit_code == EXIT_FAILURE
        assert json.loads(result.output) == {"valid": False}

    def test_flip(self) -> None:
        payload = run_json(["partition", "flip", A4_PARTITION, "--interval", "1,3"])
        assert payload["rectangles"] == [[1, 1, 3], [1, 3, 4], [1, 4, 5], [2, 2, 3]]

    def test_flip_incompatible(self) -> None:
        result = run_command(["partition", "flip", A4_PARTITION, "--interval", "1,1"])
        assert result.exit_code == EXIT_FAILURE

    def test_to_tree_and_back(self) -> None:
        assert run_json(["partition", "to-tree", A4_PARTITION]) == {
            "tree": [[0, [[0, 0], 0]], 0]
        }
        payload = run_json(["tree", "to-partition", "[[0,[[0,0],0]],0]"])
        assert payload["rank"] == 4
        assert payload["rectangles"] == [[1, 1, 4], [1, 4, 5], [2, 2, 3], [2, 3, 4]]

    def test_tree_canonical(self) -> None:
        assert run_json(["tree", "canonical", '{"tree": [0, [0, 0]]}']) == {
            "tree": [[0, 0], 0]
        }

    def test_show(self) -> None:
        result = run_command(["partition", "show", A4_PARTITION])
        assert result.exit_code == EXIT_OK
        assert "A = (1,1,4)" in result.output


class TestEdgesAndGroupoid:
    def test_edge_list(self) -> None:
        payload = run_json(["edge", "list", "--rank", "2"])
        assert payload["count"] == 4
        assert len(payload["elements"]) == 4

    def test_edge_count(self) -> None:
        assert run_json(["edge", "count", "--rank", "4"]) == {"rank": 4, "count": 20}

    def test_nu(self) -> None:
        payload = run_json(["nu", "--rank", "2", "--alpha", "1", "--base", "2"])
        assert payload["element"] == [3, 1, 2]
        assert payload["base"] == [2]

    def test_nu_alpha_in_base(self) -> None:
        result = run_command(["nu", "--rank", "3", "--alpha", "1", "--base", "1,2"])
        assert result.exit_code == EXIT_FAILURE

    def test_decompose(self) -> None:
        payload = run_json(["decompose", "--rank", "2", "[3,2,1]"])
        assert [item["element"] for item in payload] == [[2, 1, 3], [1, 3, 2], [2, 1, 3]]


class TestGeneric:
    def test_roots(self) -> None:
        payload = run_json(["generic", "roots", "[[1,3],[3,1]]"])
        assert payload["count"] == 3
        assert len(payload["roots"]) == 3

    def test_infinite_system_hits_cap(self) -> None:
        result = run_command(["generic", "roots", "[[1,0],[0,1]]", "--bound", "50"])
        assert result.exit_code == EXIT_FAILURE

    def test_malformed_matrix(self) -> None:
        result = run_command(["generic", "roots", "[[1,3],[2,1]]"])
        assert result.exit_code == EXIT_FAILURE

    def test_check_cocycle(self) -> None:
        payload = run_json(
            ["generic", "check-cocycle", '{"size": 2, "m": [[1, 5], [5, 1]]}',
             "--samples", "25", "--seed", "7"]
        )
        assert payload == {"samples": 25, "failures": 0, "seed": 7}


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["square"],
            ["square", "check", "--rank", "2", "s1"],
            ["square", "check", "--rank", "2", "t1", "s1", "s2", "s1"],
            ["square", "check", "s1", "s1", "s2", "s2"],
            ["square", "reorient", "--rank", "2", "--move", "spin", "s1", "s1", "s2", "s2"],
            ["partition", "flip", A4_PARTITION, "--interval", "1,2,3"],
            ["cube", "validate", "{not json"],
        ],
    )
    def test_usage_errors(self, argv: list[str]) -> None:
        assert run_command(argv).exit_code == EXIT_USAGE

    def test_help(self) -> None:
        assert run_command(["--help"]).exit_code == EXIT_OK


def test_main_prints_output(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["edge", "count", "--rank", "3"]) == EXIT_OK
    captured = capsys.readouterr()
    assert json.loads(captured.out) == {"count": 10, "rank": 3}


def test_main_reports_errors(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["--log-level", "debug", "transfer", "image", "--rank", "2", "s1", "s2"]) == 1
    assert "does not carry" in capsys.readouterr().err
