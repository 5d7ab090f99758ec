# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1
"""
Dependency graphs of verification tasks.

A check such as the Moebius-matched boundary identity needs D0P(phi) and
D0B(phi) of the same input; other checks need one of them. Expressing each
check as a `Task` lets the `Executor` compute every shared input once,
run the checks in a deterministic order and drop intermediate values as soon
as no remaining task reads them.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterator, List, Optional, Set, Tuple

import networkx
import tqdm
from pydantic import BaseModel
from typing_extensions import Generic, TypeVar

logger = logging.getLogger(__name__)

ValueT = TypeVar("ValueT")

# source node linking every target into the graph, so that a target without
# dependencies is still scheduled
_ROOT = "__targets__"


class Task(ABC, BaseModel, Generic[ValueT], frozen=True):
    """
    A node of the graph, compared and hashed by value.

    `arguments` names the tasks whose values `execute` receives as keyword
    arguments.
    """

    @abstractmethod
    def arguments(self) -> Dict[str, "Task"]: ...

    @abstractmethod
    def execute(self, **kwargs) -> ValueT: ...

    def priority(self) -> int:
        """Among ready tasks of the same group, higher runs first."""
        return 0

    def group_label(self) -> Optional[str]:
        """Ready tasks are ordered by this label first."""
        return None


def _order_key(node: Any) -> Tuple[str, int, str]:
    if isinstance(node, str):
        return ("", 0, "")
    return (node.group_label() or "", -node.priority(), type(node).__name__)


class Executor:
    """
    Runs a set of target tasks together with everything they depend on.

    Values listed in `cached_values` are taken as given and their tasks are
    not executed.
    """

    targets: List[Task]
    schedule: List[Task]
    dependencies: Dict[Task, Set[Task]]
    cached_values: Optional[Dict[Task, Any]]

    def __init__(
        self,
        tasks: List[Task],
        cached_values: Optional[Dict[Task, Any]] = None,
    ):
        self.targets = tasks
        self.cached_values = cached_values
        self.schedule = self._make_schedule(tasks)

    def _known(self) -> Dict[Task, Any]:
        return self.cached_values or {}

    def _build_dependencies(self, targets: List[Task]) -> Dict[Task, Set[Task]]:
        deps: Dict[Task, Set[Task]] = {}
        pending = list(targets)
        while pending:
            task = pending.pop()
            if task in deps:
                continue
            if task in self._known():
                deps[task] = set()
                continue
            deps[task] = set(task.arguments().values())
            pending.extend(deps[task])
        return deps

    def _make_schedule(self, targets: List[Task]) -> List[Task]:
        self.dependencies = self._build_dependencies(targets)

        graph = networkx.DiGraph()
        graph.add_node(_ROOT)
        graph.add_edges_from((_ROOT, task) for task in targets)
        for task, deps in self.dependencies.items():
            graph.add_edges_from((dep, task) for dep in deps)

        order = networkx.lexicographical_topological_sort(graph, key=_order_key)
        return [n for n in order if n is not _ROOT and n not in self._known()]

    def _last_uses(self) -> Dict[Task, int]:
        """Index of the last scheduled step that reads each value."""
        last: Dict[Task, int] = {}
        for idx, task in enumerate(self.schedule):
            last.setdefault(task, idx)
            for dep in self.dependencies.get(task, ()):
                last[dep] = idx
        for task in self._known():
            last.setdefault(task, len(self.schedule))
        return last

    def run(
        self, quiet: bool = False, desc: Optional[str] = None
    ) -> Iterator[Tuple[Task, Any]]:
        """Execute the schedule, yielding (task, value) for each target."""
        last = self._last_uses()
        targets = set(self.targets)
        values: Dict[Task, Any] = dict(self._known())

        steps = tqdm.tqdm(self.schedule, disable=quiet, desc=desc or "Running checks")
        for idx, task in enumerate(steps):
            kwargs = {name: values[dep] for name, dep in task.arguments().items()}
            logger.debug(f"Running {type(task).__name__}")
            values[task] = task.execute(**kwargs)
            if task in targets:
                yield task, values[task]
            for key in [k for k in values if last[k] <= idx]:
                del values[key]

    def execute(self, quiet: bool = False, desc: Optional[str] = None) -> None:
        """Run for side effects only."""
        for _ in self.run(quiet=quiet, desc=desc):
            pass
