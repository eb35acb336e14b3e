"""Run statistics shared by the two exact branching solvers."""
from __future__ import annotations

import json
from dataclasses import dataclass


class SolverTimeout(Exception):
    """Raised when a solver exceeds its time limit (no partial result)."""


@dataclass
class SolveStats:
    """Counters collected during one solver run.

    Base cases are counted by type: ``base_budget`` for children whose
    chosen set already exceeds the budget, ``base_undominatable`` for the
    light-coverage bound (more undominatable vertices than the remaining
    budget could ever dominate), ``base_exact`` for leaves handed to the
    exact augmenting-set subroutine.  ``measure_violations`` stays zero
    unless the branching measure ever fails to drop as required.
    """

    nodes: int = 0
    max_dw: int = 0
    max_depth: int = 0
    base_budget: int = 0
    base_undominatable: int = 0
    base_exact: int = 0
    measure_violations: int = 0
    db_used: int | None = None

    def as_line(self) -> str:
        """One machine-readable JSON line."""
        return json.dumps(
            {
                "nodes": self.nodes,
                "max_dw": self.max_dw,
                "max_depth": self.max_depth,
                "base_budget": self.base_budget,
                "base_undominatable": self.base_undominatable,
                "base_exact": self.base_exact,
                "measure_violations": self.measure_violations,
                "db": self.db_used,
            },
            sort_keys=True,
        )
