"""Ant colony solvers with a per-customer pheromone trail.

Each customer carries a pheromone value, initialized proportional to
profit and scaled into (0, 1].  Ants build solutions one customer at a
time with the random proportional rule: candidate i is picked with
probability tau_i^alpha * eta_i^beta, normalized over the still
affordable, unchosen customers, where eta_i is the static
profit-to-closure-cost ratio.  After all ants of an iteration finish
(optionally each polished to a 1-swap local optimum by the sweeping
climb), the trail evaporates once by factor (1 - rho) and every ant
deposits gamma * profit(solution) on the customers it selected.

With local search enabled the solver is the hybrid variant (HACO);
without it, plain ACO.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rng
from .local_search import sweep_improve
from .model import CoverTracker, Instance, Solution, evaluate


class ZeroClosureCostError(Exception):
    """A customer with an empty closure makes the heuristic ratio undefined."""


class EmptyCandidateSetError(Exception):
    """Selection probabilities were requested for an empty candidate set."""


@dataclass
class AcoParams:
    alpha: float = 1.1
    beta: float = 1.5
    gamma: float = 0.020
    rho: float = 0.13
    ants: int = 10
    iterations: int = 10
    use_local_search: bool = True

    def __post_init__(self):
        if not 0 < self.rho <= 1:
            raise ValueError(f"rho must be in (0, 1], got {self.rho}")
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha and beta must be non-negative")
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if self.ants < 1:
            raise ValueError("need at least one ant")
        if self.iterations < 0:
            raise ValueError("iterations must be non-negative")


@dataclass
class PheromoneState:
    tau: np.ndarray  # one value per customer, 1-based id i at tau[i-1]
    theta: float


@dataclass
class RunResult:
    best: Solution
    trace: list[tuple[int, int]]  # (iteration, best profit so far)
    pheromone: PheromoneState


def init_pheromone(instance: Instance) -> PheromoneState:
    """Start every trail at theta * profit with theta = 1 / max profit."""
    instance.require_valid()
    if instance.n_customers == 0:
        raise ValueError("instance has no customers")
    theta = 1.0 / float(instance.profit_vector.max())
    return PheromoneState(tau=theta * instance.profit_vector.astype(np.float64), theta=theta)


def heuristic_info(instance: Instance) -> np.ndarray:
    """Static desirability eta_i = profit_i / closure_cost_i."""
    instance.require_valid()
    ccost = instance.closure_cost_vector
    if (ccost <= 0).any():
        bad = int(np.flatnonzero(ccost <= 0)[0]) + 1
        raise ZeroClosureCostError(f"customer {bad} has an empty closure")
    return instance.profit_vector / ccost.astype(np.float64)


def selection_probabilities(
    state: PheromoneState,
    eta: np.ndarray,
    candidates,
    alpha: float,
    beta: float,
) -> np.ndarray:
    """Random-proportional-rule probabilities, zero outside the candidate set.

    ``candidates`` holds 1-based customer ids; the returned array has one
    entry per customer.
    """
    cand = np.asarray(sorted(int(c) for c in candidates), dtype=np.intp)
    if cand.size == 0:
        raise EmptyCandidateSetError("no candidates to choose from")
    weights = state.tau[cand - 1] ** alpha * eta[cand - 1] ** beta
    total = weights.sum()
    probs = np.zeros(len(eta), dtype=np.float64)
    if total > 0 and np.isfinite(total):
        probs[cand - 1] = weights / total
    else:
        # degenerate trail (e.g. fully evaporated): fall back to uniform
        probs[cand - 1] = 1.0 / cand.size
    return probs


def roulette_select(probabilities: np.ndarray, r: float) -> int:
    """First customer (in id order) whose cumulative probability reaches r.

    Rounding can leave r above the final cumulative value; the last
    customer with positive probability is returned in that case.
    """
    p = np.asarray(probabilities, dtype=np.float64)
    positive = np.flatnonzero(p > 0)
    if positive.size == 0:
        raise ValueError("no positive-probability candidate")
    cum = np.cumsum(p[positive])
    k = int(np.searchsorted(cum, r, side="left"))
    if k >= positive.size:
        k = positive.size - 1
    return int(positive[k]) + 1


def construct_solution(
    instance: Instance,
    budget: int,
    state: PheromoneState,
    eta: np.ndarray,
    params: AcoParams,
    gen: np.random.Generator,
) -> Solution:
    """One ant's probabilistic greedy fill, always feasible.

    Candidates at each step are the unchosen customers whose marginal
    cost keeps the running cost within budget; the walk stops when no
    candidate remains.  tau is constant during a single construction,
    so the rule's weights are computed once up front.
    """
    instance.require_valid()
    m = instance.n_customers
    weights = state.tau ** params.alpha * eta ** params.beta
    if not (np.isfinite(weights).all() and weights.sum() > 0):
        weights = np.ones(m, dtype=np.float64)

    tracker = CoverTracker(instance)
    selected = np.zeros(m, dtype=bool)
    picked: list[int] = []
    while True:
        affordable = ~selected & (tracker.cost + tracker.marginal <= budget)
        cand = np.flatnonzero(affordable)
        if cand.size == 0:
            break
        w = weights[cand]
        total = w.sum()
        probs = w / total if total > 0 else np.full(cand.size, 1.0 / cand.size)
        r = gen.random()
        cum = np.cumsum(probs)
        k = int(np.searchsorted(cum, r, side="left"))
        if k >= cand.size:
            k = cand.size - 1
        choice = int(cand[k])
        selected[choice] = True
        picked.append(choice + 1)
        tracker.add(choice)
    return evaluate(instance, picked)


def evaporate(state: PheromoneState, rho: float) -> PheromoneState:
    """Decay every trail by (1 - rho), in place."""
    if not 0 < rho <= 1:
        raise ValueError(f"rho must be in (0, 1], got {rho}")
    state.tau *= 1.0 - rho
    return state


def deposit(state: PheromoneState, solutions, gamma: float) -> PheromoneState:
    """Each ant adds gamma * its solution profit onto its selected customers."""
    for sol in solutions:
        if not sol.selected:
            continue
        idx = [c - 1 for c in sol.selected]
        state.tau[idx] += gamma * sol.profit
    return state


def run(
    instance: Instance,
    budget: int,
    params: AcoParams,
    seed: int,
) -> RunResult:
    """Full colony run; returns the incumbent, its trace, and the final trail.

    Ant k of iteration i draws from the stream (seed, ANT, i, k), so the
    result is the same no matter how the ants are scheduled.
    """
    instance.require_valid()
    state = init_pheromone(instance)
    eta = heuristic_info(instance)
    best = evaluate(instance, ())
    trace: list[tuple[int, int]] = []
    for it in range(1, params.iterations + 1):
        sols = []
        for k in range(1, params.ants + 1):
            gen = rng.substream(seed, rng.ANT, it, k)
            sol = construct_solution(instance, budget, state, eta, params, gen)
            if params.use_local_search:
                sol = sweep_improve(instance, budget, sol, gen)
            sols.append(sol)
        evaporate(state, params.rho)
        deposit(state, sols, params.gamma)
        for sol in sols:
            if sol.profit > best.profit:
                best = sol
        trace.append((it, best.profit))
    return RunResult(best=best, trace=trace, pheromone=state)
