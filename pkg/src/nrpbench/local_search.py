"""Hill climbing over customer selections: feasible adds and 1-swaps.

Two climbs of different strength share the same move set.

`improve` is the cheap first-found variant: each round samples one
unselected customer uniformly; if that customer fits within budget it
is added, otherwise the most profitable feasible 1-swap bringing it in
replaces a selected customer, and the climb stops the first time the
sampled customer can do neither.  The result is feasible and at least
as profitable as the start, but it may still admit moves through other
customers.

`sweep_improve` keeps sweeping all unselected customers until none can
be added or swapped in, so its output is a certified 1-swap local
optimum: no feasible addition and no profit-improving feasible swap
exists at all.  The ant-colony hybrid uses this stronger operator on
each constructed solution.

The standalone restart solver climbs with `improve` from independent
random feasible selections and keeps the best result.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rng
from .model import CoverTracker, Instance, Solution, evaluate


class InfeasibleStartError(Exception):
    """The starting selection already exceeds the budget."""


@dataclass
class FhcParams:
    restarts: int = 100

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be positive")


def random_feasible(instance: Instance, budget: int, gen: np.random.Generator) -> Solution:
    """Greedy fill along a uniformly random customer order."""
    instance.require_valid()
    tracker = CoverTracker(instance)
    picked: list[int] = []
    for idx in gen.permutation(instance.n_customers):
        idx = int(idx)
        if tracker.cost + tracker.marginal[idx] <= budget:
            tracker.add(idx)
            picked.append(idx + 1)
    return evaluate(instance, picked)


def improve(instance: Instance, budget: int, start: Solution, gen: np.random.Generator) -> Solution:
    """First-found climb: stops when one sampled customer cannot move.

    Each round draws j uniformly from the unselected customers.  A
    feasible add of j is taken outright; otherwise the best feasible
    profit-improving swap for j (maximum gain, ties to the smaller
    outgoing id) is taken; if neither exists the climb ends.
    """
    instance.require_valid()
    if start.cost > budget:
        raise InfeasibleStartError(f"start cost {start.cost} exceeds budget {budget}")

    costs_f = instance.cost_vector.astype(np.float64)
    profits = instance.profit_vector
    closure_f = instance.closure_matrix_f

    m = instance.n_customers
    selected = np.zeros(m, dtype=bool)
    selected[[c - 1 for c in start.selected]] = True
    counts = closure_f[selected].sum(axis=0) if selected.any() else np.zeros(
        instance.n_requirements)
    cost = start.cost
    profit = start.profit

    while True:
        out_idx = np.flatnonzero(~selected)
        if out_idx.size == 0:
            break
        j = int(out_idx[gen.integers(0, out_idx.size)])

        marg = closure_f[j] @ (costs_f * (counts == 0))
        if cost + marg <= budget:
            counts += closure_f[j]
            cost = int(cost + marg)
            profit += int(profits[j])
            selected[j] = True
            continue

        sel_idx = np.flatnonzero(selected)
        if sel_idx.size == 0:
            break
        # cost(S + j - l) = cost + marg - freed(l) + kept(l): dropping l
        # frees the requirements only l covers, except those j re-covers.
        singly_cost = costs_f * (counts == 1)
        freed = closure_f[sel_idx] @ singly_cost
        kept = closure_f[sel_idx] @ (singly_cost * closure_f[j])
        swap_cost = cost + marg - freed + kept
        swap_ok = (swap_cost <= budget) & (profits[sel_idx] < profits[j])
        if not swap_ok.any():
            break
        ok = np.flatnonzero(swap_ok)
        l_pos = ok[int(np.argmin(profits[sel_idx[ok]]))]
        l = int(sel_idx[l_pos])
        counts += closure_f[j] - closure_f[l]
        cost = int(swap_cost[l_pos])
        profit += int(profits[j]) - int(profits[l])
        selected[j] = True
        selected[l] = False

    return evaluate(instance, (int(i) + 1 for i in np.flatnonzero(selected)))


def sweep_improve(instance: Instance, budget: int, start: Solution,
                  gen: np.random.Generator) -> Solution:
    """Climb from a feasible selection to a 1-swap local optimum.

    Passes repeat until no move exists.  A pass visits the unselected
    customers in random order; the first one that can either be added
    within budget or swapped in at a strict profit gain triggers the
    move and the pass restarts.  Among the swaps for a given incomer
    the most profitable feasible one wins (ties: smaller outgoing id).
    The returned selection admits no feasible addition and no
    profit-improving 1-swap at all.
    """
    instance.require_valid()
    if start.cost > budget:
        raise InfeasibleStartError(f"start cost {start.cost} exceeds budget {budget}")

    costs_f = instance.cost_vector.astype(np.float64)
    profits = instance.profit_vector
    closure_f = instance.closure_matrix_f

    m = instance.n_customers
    selected = np.zeros(m, dtype=bool)
    selected[[c - 1 for c in start.selected]] = True
    counts = closure_f[selected].sum(axis=0) if selected.any() else np.zeros(
        instance.n_requirements)
    cost = start.cost
    profit = start.profit

    while True:
        sel_idx = np.flatnonzero(selected)
        out_idx = np.flatnonzero(~selected)
        if out_idx.size == 0:
            break

        # marginal add cost of every outside customer against the current cover
        uncovered_cost = costs_f * (counts == 0)
        marg = closure_f[out_idx] @ uncovered_cost
        add_ok = cost + marg <= budget

        # swap cost: dropping l frees the requirements only l covers, except
        # those the incomer j re-covers.  With j already counted in,
        # cost(S + j - l) = cost + marg[j] - freed(l) + kept(j, l) where
        # freed(l) sums singly-covered requirements of l and kept(j, l)
        # restricts that sum to requirements j also needs.
        singly_cost = costs_f * (counts == 1)
        if sel_idx.size:
            freed = closure_f[sel_idx] @ singly_cost
            kept = (closure_f[out_idx] * singly_cost) @ closure_f[sel_idx].T
            swap_cost = cost + marg[:, None] - freed[None, :] + kept
            swap_ok = (swap_cost <= budget) & (profits[sel_idx][None, :] < profits[out_idx][:, None])
        else:
            swap_ok = np.zeros((out_idx.size, 0), dtype=bool)

        movable = add_ok | swap_ok.any(axis=1)
        if not movable.any():
            break

        order = gen.permutation(out_idx.size)
        pos = next(int(p) for p in order if movable[p])
        j = int(out_idx[pos])

        if add_ok[pos]:
            counts += closure_f[j]
            cost = int(cost + marg[pos])
            profit += int(profits[j])
            selected[j] = True
        else:
            # best feasible improving swap: maximize incoming-minus-outgoing
            # profit, i.e. minimize the outgoing profit; ties to smaller id
            ok = np.flatnonzero(swap_ok[pos])
            l_pos = ok[int(np.argmin(profits[sel_idx[ok]]))]
            l = int(sel_idx[l_pos])
            counts += closure_f[j] - closure_f[l]
            cost = int(swap_cost[pos, l_pos])
            profit += int(profits[j]) - int(profits[l])
            selected[j] = True
            selected[l] = False

    return evaluate(instance, (int(i) + 1 for i in np.flatnonzero(selected)))


def fhc(instance: Instance, budget: int, params: FhcParams, seed: int) -> Solution:
    """Best of `restarts` independent random-start first-found climbs.

    Restart i draws from the stream (seed, FHC_RESTART, i); ties keep
    the earliest restart's result.
    """
    instance.require_valid()
    best: Solution | None = None
    for i in range(1, params.restarts + 1):
        gen = rng.substream(seed, rng.FHC_RESTART, i)
        sol = improve(instance, budget, random_feasible(instance, budget, gen), gen)
        if best is None or sol.profit > best.profit:
            best = sol
    return best
