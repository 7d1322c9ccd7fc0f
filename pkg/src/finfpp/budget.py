"""Search budgets shared by the exhaustive procedures."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int, reason: str = "node budget"):
        super().__init__(f"{reason} exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 50_000_000
    time_limit: Optional[float] = None
    parallel_width: int = 1

    def __post_init__(self):
        if self.max_nodes <= 0 or self.parallel_width <= 0:
            raise ValueError("budget values must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("budget values must be positive")


class Counter:
    """Node counter that raises once the budget is spent."""

    __slots__ = ("nodes", "limit", "deadline")

    def __init__(self, budget: Optional[SearchBudget] = None):
        budget = budget or SearchBudget()
        self.nodes = 0
        self.limit = budget.max_nodes
        self.deadline = time.monotonic() + budget.time_limit if budget.time_limit else None

    def tick(self, n: int = 1):
        self.nodes += n
        if self.nodes > self.limit:
            raise BudgetExceeded(self.nodes)
        if self.deadline is not None and not self.nodes & 0x3FF and time.monotonic() > self.deadline:
            raise BudgetExceeded(self.nodes, "time limit")
