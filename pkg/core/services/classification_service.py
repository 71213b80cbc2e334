"""Cube classification service.

Counts the n-cubes of A_n up to reorientation by independent routes and
refuses to report a number the routes disagree on.
"""

from __future__ import annotations

import logging
from typing import Optional

from core.config import get_exhaustive_rank
from core.cubes import brute_force_cubes
from core.exceptions import CoxeterError
from core.rectangles import (
    bigrassmannian_scan,
    edge_set,
    edge_set_from_orbits,
    enumerate_cube_classes,
    sorted_elements,
)
from core.types import CubeClassReport, EdgeReport

logger = logging.getLogger(__name__)

# Largest rank the brute-force search runs at by default.
BRUTE_FORCE_RANK = 4


class CubeClassificationService:
    """Classify cubes and edge elements of A_n, caching results per rank.

    ``enumeration_bound`` replaces the configured enumeration bound for this
    service; ``brute_force_rank`` caps the brute-force oracle.
    """

    def __init__(
        self,
        brute_force_rank: Optional[int] = None,
        enumeration_bound: Optional[int] = None,
    ):
        self._brute_force_rank = brute_force_rank
        self._enumeration_bound = enumeration_bound
        self._class_reports: dict[int, CubeClassReport] = {}
        self._edge_reports: dict[int, EdgeReport] = {}

    def _brute_force_limit(self) -> int:
        if self._brute_force_rank is not None:
            return self._brute_force_rank
        return min(BRUTE_FORCE_RANK, get_exhaustive_rank())

    def classify(self, rank: int) -> CubeClassReport:
        """Count cube classes by trees, flip orbits and (for small ranks) brute force."""
        cached = self._class_reports.get(rank)
        if cached is not None:
            return cached

        classes = enumerate_cube_classes(rank, bound=self._enumeration_bound)
        brute_force_count: Optional[int] = None
        if rank <= self._brute_force_limit():
            brute_force_count = len(brute_force_cubes(rank))
            if brute_force_count != classes.count:
                raise CoxeterError(
                    f"A_{rank}: {classes.count} tree classes but brute force found "
                    f"{brute_force_count}"
                )

        report = CubeClassReport(
            rank=rank,
            count=classes.count,
            flip_orbit_count=classes.flip_orbit_count,
            brute_force_count=brute_force_count,
            representatives=[
                [element.to_list() for element in cube.terminal_edges()]
                for cube in classes.representatives
            ],
        )
        logger.info(
            "A_%s cube classes: trees=%s flip orbits=%s brute force=%s",
            rank,
            report.count,
            report.flip_orbit_count,
            report.brute_force_count,
        )
        self._class_reports[rank] = report
        return report

    def edge_report(self, rank: int) -> EdgeReport:
        """Edge elements from rectangles, checked against the other two routes."""
        cached = self._edge_reports.get(rank)
        if cached is not None:
            return cached

        elements = edge_set(rank, self._enumeration_bound)
        bigrassmannian_count: Optional[int] = None
        orbit_count: Optional[int] = None
        if rank <= get_exhaustive_rank():
            bigrassmannians = bigrassmannian_scan(rank)
            orbit_elements = edge_set_from_orbits(rank, self._enumeration_bound)
            bigrassmannian_count = len(bigrassmannians)
            orbit_count = len(orbit_elements)
            if bigrassmannians != elements or orbit_elements != elements:
                raise CoxeterError(
                    f"A_{rank}: {len(elements)} rectangle elements, "
                    f"{bigrassmannian_count} bigrassmannian, {orbit_count} on cube edges"
                )

        report = EdgeReport(
            rank=rank,
            count=len(elements),
            elements=[element.to_list() for element in sorted_elements(elements)],
            bigrassmannian_count=bigrassmannian_count,
            orbit_count=orbit_count,
        )
        logger.info("A_%s has %s edge elements", rank, report.count)
        self._edge_reports[rank] = report
        return report

    def clear_cache(self) -> None:
        self._class_reports.clear()
        self._edge_reports.clear()
