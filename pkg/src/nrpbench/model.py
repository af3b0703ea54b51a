"""Data model for the Next Release Problem.

An instance is a set of requirements with integer costs, an acyclic
prerequisite graph over them, and a set of customers, each with an
integer profit and a set of requested requirements.  Satisfying a
customer means developing every requested requirement plus all of its
transitive prerequisites (the customer's *closure*).  A solution is a
subset of customers; its cost is the cost of the union of their
closures (shared requirements counted once) and its profit is the sum
of their profits.

All ids are 1-based.  Instances are immutable after construction; the
derived per-customer closures and the numpy views used by the solvers
are computed once when the instance is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


class InvalidInstanceError(Exception):
    """Raised when an operation requires a validated instance."""


@dataclass(frozen=True)
class Requirement:
    id: int
    cost: int


@dataclass(frozen=True)
class DependencyGraph:
    """Prerequisite edges: (p, q) means p must be developed before q."""

    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Customer:
    id: int
    profit: int
    requests: tuple[int, ...]
    closure: frozenset[int]
    closure_cost: int


@dataclass(frozen=True)
class Solution:
    """An evaluated customer selection."""

    selected: frozenset[int]
    covered: frozenset[int]
    cost: int
    profit: int


@dataclass(frozen=True)
class ValidationIssue:
    kind: str  # "cyclic-dependency" | "bad-id" | "non-positive-value"
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


class Instance:
    """A full problem instance with precomputed closures.

    Build through :func:`make_instance`.  When the raw data is
    malformed (cycle, id out of range, non-positive cost or profit) the
    instance still exists so that :func:`validate` can report the
    issues, but the derived caches stay unset and the solver-facing
    accessors raise :class:`InvalidInstanceError`.
    """

    def __init__(
        self,
        costs: Sequence[int],
        edges: Iterable[tuple[int, int]],
        customers: Iterable[tuple[int, Iterable[int]]],
        level_sizes: Sequence[int] | None = None,
    ):
        costs = [int(c) for c in costs]
        edge_list = tuple((int(p), int(q)) for p, q in edges)
        raw_customers = [(int(w), tuple(int(r) for r in reqs)) for w, reqs in customers]

        n = len(costs)
        if level_sizes is None:
            level_sizes = (n,) if n else ()
        level_sizes = tuple(int(k) for k in level_sizes)
        if sum(level_sizes) != n:
            raise ValueError(f"level sizes {level_sizes} do not sum to {n} requirements")

        self.requirements = tuple(Requirement(i + 1, c) for i, c in enumerate(costs))
        self.graph = DependencyGraph(edge_list)
        self.level_sizes = level_sizes
        self.total_cost = sum(costs)

        self._issues = tuple(_structural_issues(costs, edge_list, raw_customers))
        if self._issues:
            self.customers: tuple[Customer, ...] = tuple(
                Customer(i + 1, w, reqs, frozenset(), 0)
                for i, (w, reqs) in enumerate(raw_customers)
            )
            self._cost_vec = None
            return

        cost_vec = np.asarray(costs, dtype=np.int64)
        parents = _parent_lists(n, edge_list)
        members = []
        for i, (w, reqs) in enumerate(raw_customers):
            closure = _prerequisite_closure(parents, reqs)
            ccost = int(cost_vec[[r - 1 for r in closure]].sum()) if closure else 0
            members.append(Customer(i + 1, w, reqs, frozenset(closure), ccost))
        self.customers = tuple(members)

        m = len(members)
        closure_bool = np.zeros((m, n), dtype=bool)
        for i, cust in enumerate(members):
            for r in cust.closure:
                closure_bool[i, r - 1] = True

        self._cost_vec = cost_vec
        self._profit_vec = np.asarray([c.profit for c in members], dtype=np.int64)
        self._closure_bool = closure_bool
        self._closure_f64 = closure_bool.astype(np.float64)
        self._closure_idx = tuple(np.flatnonzero(row) for row in closure_bool)
        self._closure_cost_vec = np.asarray([c.closure_cost for c in members], dtype=np.int64)

    # -- structure ---------------------------------------------------------

    @property
    def n_requirements(self) -> int:
        return len(self.requirements)

    @property
    def n_customers(self) -> int:
        return len(self.customers)

    @property
    def is_valid(self) -> bool:
        return not self._issues

    def require_valid(self) -> None:
        if self._issues:
            detail = "; ".join(str(i) for i in self._issues)
            raise InvalidInstanceError(f"instance failed validation: {detail}")

    # -- solver-facing numpy views (valid instances only) ------------------

    @property
    def cost_vector(self) -> np.ndarray:
        self.require_valid()
        return self._cost_vec

    @property
    def profit_vector(self) -> np.ndarray:
        self.require_valid()
        return self._profit_vec

    @property
    def closure_matrix(self) -> np.ndarray:
        """Boolean (customers x requirements) closure membership."""
        self.require_valid()
        return self._closure_bool

    @property
    def closure_matrix_f(self) -> np.ndarray:
        """Float64 copy of the closure matrix.

        All entries are 0/1 and all dot products against integer cost
        vectors stay exactly representable, so matmuls through this
        view are bit-deterministic regardless of BLAS threading.
        """
        self.require_valid()
        return self._closure_f64

    @property
    def closure_indices(self) -> tuple[np.ndarray, ...]:
        """Per-customer sorted 0-based requirement indices of the closure."""
        self.require_valid()
        return self._closure_idx

    @property
    def closure_cost_vector(self) -> np.ndarray:
        self.require_valid()
        return self._closure_cost_vec

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            self.requirements == other.requirements
            and self.graph == other.graph
            and self.customers == other.customers
            and self.level_sizes == other.level_sizes
        )

    def __repr__(self) -> str:
        return (
            f"Instance({self.n_requirements} requirements, "
            f"{len(self.graph.edges)} edges, {self.n_customers} customers)"
        )


def make_instance(
    costs: Sequence[int],
    edges: Iterable[tuple[int, int]],
    customers: Iterable[tuple[int, Iterable[int]]],
    level_sizes: Sequence[int] | None = None,
) -> Instance:
    """Build an :class:`Instance` from raw parts.

    ``customers`` is a sequence of (profit, requested requirement ids).
    """
    return Instance(costs, edges, customers, level_sizes)


def _structural_issues(costs, edges, raw_customers) -> list[ValidationIssue]:
    issues: list[ValidationIssue] = []
    n = len(costs)

    for i, c in enumerate(costs):
        if c < 1:
            issues.append(ValidationIssue("non-positive-value", f"requirement {i + 1} has cost {c}"))
    for i, (w, _reqs) in enumerate(raw_customers):
        if w < 1:
            issues.append(ValidationIssue("non-positive-value", f"customer {i + 1} has profit {w}"))

    ids_ok = True
    for p, q in edges:
        for e in (p, q):
            if not 1 <= e <= n:
                issues.append(ValidationIssue("bad-id", f"edge ({p}, {q}) references requirement {e}"))
                ids_ok = False
    for i, (_w, reqs) in enumerate(raw_customers):
        for r in reqs:
            if not 1 <= r <= n:
                issues.append(ValidationIssue("bad-id", f"customer {i + 1} requests requirement {r}"))

    if ids_ok:
        cycle = _find_cycle(n, edges)
        if cycle is not None:
            path = " -> ".join(str(r) for r in cycle)
            issues.append(ValidationIssue("cyclic-dependency", f"dependency cycle {path}"))
    return issues


def _parent_lists(n: int, edges) -> list[list[int]]:
    parents: list[list[int]] = [[] for _ in range(n + 1)]
    for p, q in edges:
        parents[q].append(p)
    return parents


def _find_cycle(n: int, edges) -> list[int] | None:
    """Kahn's algorithm; on failure walk back through leftover nodes to extract one cycle."""
    children: list[list[int]] = [[] for _ in range(n + 1)]
    indeg = [0] * (n + 1)
    for p, q in edges:
        children[p].append(q)
        indeg[q] += 1
    queue = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in children[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if seen == n:
        return None
    leftover = {v for v in range(1, n + 1) if indeg[v] > 0}
    parents = _parent_lists(n, edges)
    start = min(leftover)
    trail = [start]
    pos = {start: 0}
    node = start
    while True:
        node = next(p for p in parents[node] if p in leftover)
        if node in pos:
            # trail follows parent links, so forward edges run right-to-left
            return [node] + trail[pos[node]:][::-1]
        pos[node] = len(trail)
        trail.append(node)


def _prerequisite_closure(parents: list[list[int]], request_ids: Iterable[int]) -> set[int]:
    seen = set(request_ids)
    stack = list(seen)
    while stack:
        r = stack.pop()
        for p in parents[r]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


# -- operations -------------------------------------------------------------


def validate(instance: Instance) -> list[ValidationIssue]:
    """Check structural soundness; an empty list means the instance is usable.

    Reported kinds: ``cyclic-dependency`` (with one concrete cycle),
    ``bad-id`` (edge or request outside 1..n), ``non-positive-value``
    (cost or profit below 1).
    """
    return list(instance._issues)


def closure(instance: Instance, customer_id: int) -> frozenset[int]:
    """Requirements that must be developed to satisfy one customer."""
    instance.require_valid()
    return instance.customers[_customer_index(instance, customer_id)].closure


def evaluate(instance: Instance, selected: Iterable[int]) -> Solution:
    """Evaluate a customer selection: union coverage, union cost, summed profit."""
    instance.require_valid()
    idx = sorted({_customer_index(instance, c) for c in selected})
    if not idx:
        return Solution(frozenset(), frozenset(), 0, 0)
    covered_mask = instance.closure_matrix[idx].any(axis=0)
    cost = int(instance.cost_vector[covered_mask].sum())
    profit = int(instance.profit_vector[idx].sum())
    covered = frozenset(int(r) + 1 for r in np.flatnonzero(covered_mask))
    return Solution(frozenset(i + 1 for i in idx), covered, cost, profit)


def budget(instance: Instance, ratio) -> int:
    """Budget bound: floor(ratio * total cost), ratio in (0, 1].

    ``ratio`` may be a str, Fraction, or float; floats are read at
    their shortest decimal representation so that e.g. 0.7 means 7/10.
    """
    frac = ratio if isinstance(ratio, Fraction) else Fraction(str(ratio))
    if not 0 < frac <= 1:
        raise ValueError(f"budget ratio must be in (0, 1], got {ratio}")
    return int(frac * instance.total_cost)


def marginal_cost(instance: Instance, solution: Solution, customer_id: int) -> int:
    """Cost increase from adding one customer to an evaluated solution."""
    instance.require_valid()
    if customer_id in solution.selected:
        raise ValueError(f"customer {customer_id} is already selected")
    i = _customer_index(instance, customer_id)
    new = instance.customers[i].closure - solution.covered
    if not new:
        return 0
    return int(instance.cost_vector[[r - 1 for r in new]].sum())


def _customer_index(instance: Instance, customer_id: int) -> int:
    if not 1 <= customer_id <= instance.n_customers:
        raise ValueError(f"customer id {customer_id} out of range 1..{instance.n_customers}")
    return customer_id - 1


class CoverTracker:
    """Incremental union-cost state for greedy fills.

    Tracks the covered-requirement set, the running cost, and the
    marginal cost of adding each customer; ``add`` updates all three in
    time proportional to the newly covered requirements.
    """

    def __init__(self, instance: Instance):
        instance.require_valid()
        self._inst = instance
        self.covered = np.zeros(instance.n_requirements, dtype=bool)
        self.cost = 0
        # against an empty cover the marginal cost is the closure cost
        self.marginal = instance.closure_cost_vector.astype(np.float64)

    def add(self, index: int) -> None:
        """Add customer by 0-based index."""
        inst = self._inst
        new = inst.closure_indices[index][~self.covered[inst.closure_indices[index]]]
        if new.size:
            self.cost += int(inst.cost_vector[new].sum())
            self.covered[new] = True
            self.marginal -= inst.closure_matrix_f[:, new] @ inst.cost_vector[new].astype(np.float64)

    def marginal_of(self, index: int) -> int:
        return int(self.marginal[index])
