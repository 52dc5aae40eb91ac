"""Synchronous chip diffusion on graphs.

At every step each vertex simultaneously hands one chip to every strictly
poorer neighbour and receives one chip from every strictly richer neighbour;
equal neighbours exchange nothing.  Stack sizes may go negative.  Adding a
constant to every stack never changes which chips move, and every trajectory
eventually settles into a cycle of length 1 or 2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .graphs import Graph

Config = tuple[int, ...]

DEFAULT_MAX_STEPS = 10_000


class NoRepeatWithinBudget(RuntimeError):
    """No configuration recurred within the step budget.

    Eventual periodicity is guaranteed, so hitting this means either the
    budget was set pathologically low or the engine is broken.
    """


class PeriodNotOneOrTwo(RuntimeError):
    """A repeat was found but implies a cycle length outside {1, 2}.

    This can only happen if the engine itself is buggy; it is surfaced
    loudly rather than silently accepted.
    """


@dataclass(frozen=True)
class PeriodReport:
    """Eventual cycle of a trajectory: starts after `preperiod` steps and
    repeats every `period` steps; `period_configs` are the cycle members in
    firing order."""

    preperiod: int
    period: int
    period_configs: tuple[Config, ...]


class Orientation(NamedTuple):
    """Edge directions induced by a configuration.

    arcs holds (richer, poorer) pairs; flat holds the canonical (u, v),
    u < v, pairs whose endpoints have equal stacks.
    """

    arcs: frozenset[tuple[int, int]]
    flat: frozenset[tuple[int, int]]


# --- core firing rule ------------------------------------------------------


def _fire_raw(g: Graph, stacks: Config) -> Config:
    out = list(stacks)
    for u, v in g.edges:
        su, sv = stacks[u], stacks[v]
        if su > sv:
            out[u] -= 1
            out[v] += 1
        elif sv > su:
            out[v] -= 1
            out[u] += 1
    return tuple(out)


def _fire_sorted_raw(values: Config) -> Config:
    # values ascending; on a complete graph a vertex's change depends only on
    # how many values sit strictly above and below its own.
    n = len(values)
    out: list[int] = []
    i = 0
    while i < n:
        j = i
        while j < n and values[j] == values[i]:
            j += 1
        out.extend([values[i] + (n - j) - i] * (j - i))
        i = j
    out.sort()
    return tuple(out)


def fire(g: Graph, stacks: Sequence[int]) -> Config:
    """Apply one synchronous firing step to a configuration on g.

    Every vertex gains one chip per strictly richer neighbour and loses one
    per strictly poorer neighbour.  The total number of chips is conserved.
    """
    c = tuple(int(s) for s in stacks)
    if len(c) != g.n:
        raise ValueError(f"configuration has {len(c)} stacks for a graph on {g.n} vertices")
    result = _fire_raw(g, c)
    if _audit is not None:
        _audit.check_fire(g, c, result)
    return result


def fire_complete(multiset: Iterable[int]) -> Config:
    """Fire a complete-graph configuration given as a multiset of stacks.

    Returns the sorted multiset after one step; equals sorting the result of
    fire() on K_n for any labelling of the input.
    """
    values = tuple(sorted(int(v) for v in multiset))
    if not values:
        raise ValueError("empty multiset")
    result = _fire_sorted_raw(values)
    if _audit is not None:
        _audit.check_fire_complete(values, result)
    return result


def orientation_of(g: Graph, stacks: Sequence[int]) -> Orientation:
    """Direct each edge from its richer endpoint to its poorer one.

    Edges between equal stacks are left flat.  Chips flow along exactly the
    arcs of this orientation, one chip per arc.
    """
    c = tuple(int(s) for s in stacks)
    if len(c) != g.n:
        raise ValueError(f"configuration has {len(c)} stacks for a graph on {g.n} vertices")
    arcs: set[tuple[int, int]] = set()
    flat: set[tuple[int, int]] = set()
    for u, v in g.edges:
        if c[u] > c[v]:
            arcs.add((u, v))
        elif c[v] > c[u]:
            arcs.add((v, u))
        else:
            flat.add((u, v))
    return Orientation(frozenset(arcs), frozenset(flat))


def run(g: Graph, start: Sequence[int], steps: int) -> list[Config]:
    """Trajectory [C_0, C_1, ..., C_steps] from the given start."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    current = tuple(int(s) for s in start)
    if len(current) != g.n:
        raise ValueError(f"configuration has {len(current)} stacks for a graph on {g.n} vertices")
    trajectory = [current]
    for _ in range(steps):
        current = fire(g, current)
        trajectory.append(current)
    return trajectory


def detect_period(g: Graph, start: Sequence[int], max_steps: int = DEFAULT_MAX_STEPS) -> PeriodReport:
    """Find the eventual cycle of the trajectory from `start`.

    Fires until a configuration repeats exactly.  The first repeat of a
    deterministic map pins down both the least preperiod and the least
    period, so the report is exact.  Raises NoRepeatWithinBudget if nothing
    repeats within max_steps firings, and PeriodNotOneOrTwo if the repeat
    implies a cycle length other than 1 or 2.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    current = tuple(int(s) for s in start)
    if len(current) != g.n:
        raise ValueError(f"configuration has {len(current)} stacks for a graph on {g.n} vertices")
    first_seen = {current: 0}
    trajectory = [current]
    for t in range(1, max_steps + 1):
        current = fire(g, current)
        seen_at = first_seen.get(current)
        if seen_at is not None:
            p = t - seen_at
            if p not in (1, 2):
                raise PeriodNotOneOrTwo(
                    f"configuration repeated with cycle length {p}; the firing rule admits only 1 or 2"
                )
            return PeriodReport(
                preperiod=seen_at,
                period=p,
                period_configs=tuple(trajectory[seen_at : seen_at + p]),
            )
        first_seen[current] = t
        trajectory.append(current)
    raise NoRepeatWithinBudget(f"no repeated configuration within {max_steps} steps")


def normalize(stacks: Sequence[int]) -> Config:
    """Shift all stacks so the minimum becomes 0."""
    c = tuple(int(s) for s in stacks)
    if not c:
        raise ValueError("empty configuration")
    lo = min(c)
    return tuple(s - lo for s in c)


def equivalent(c: Sequence[int], d: Sequence[int]) -> bool:
    """True iff d is c plus one constant on every stack."""
    if len(c) != len(d):
        raise ValueError(f"length mismatch: {len(c)} vs {len(d)}")
    return normalize(c) == normalize(d)


def is_period_config(g: Graph, stacks: Sequence[int]) -> bool:
    """True iff the configuration lies inside its own eventual cycle.

    Cycles have length 1 or 2, so membership is equivalent to firing twice
    returning the configuration exactly.
    """
    c = tuple(int(s) for s in stacks)
    return fire(g, fire(g, c)) == c


# --- firing audit ----------------------------------------------------------
#
# Test harnesses can enable a global audit that re-checks two structural
# facts on every fire()/fire_complete() call: chip conservation, and
# invariance of the step under adding a constant to every stack.  A
# violation raises immediately and is also tallied.


class FireAudit:
    __slots__ = ("calls", "violations", "_rng")

    def __init__(self, seed: int = 0x0D1FF):
        self.calls = 0
        self.violations = 0
        self._rng = random.Random(seed)

    def check_fire(self, g: Graph, stacks: Config, result: Config) -> None:
        self.calls += 1
        if sum(result) != sum(stacks):
            self.violations += 1
            raise AssertionError(
                f"chip conservation violated: {sum(stacks)} chips in, {sum(result)} out"
            )
        k = self._rng.randint(-5, 5)
        shifted = _fire_raw(g, tuple(s + k for s in stacks))
        if shifted != tuple(r + k for r in result):
            self.violations += 1
            raise AssertionError(f"shift equivariance violated for offset {k}")

    def check_fire_complete(self, values: Config, result: Config) -> None:
        self.calls += 1
        if sum(result) != sum(values):
            self.violations += 1
            raise AssertionError(
                f"chip conservation violated: {sum(values)} chips in, {sum(result)} out"
            )
        k = self._rng.randint(-5, 5)
        shifted = _fire_sorted_raw(tuple(v + k for v in values))
        if shifted != tuple(r + k for r in result):
            self.violations += 1
            raise AssertionError(f"shift equivariance violated for offset {k}")


_audit: FireAudit | None = None


def enable_fire_audit() -> FireAudit:
    global _audit
    if _audit is None:
        _audit = FireAudit()
    return _audit


def get_fire_audit() -> FireAudit | None:
    return _audit


def disable_fire_audit() -> None:
    global _audit
    _audit = None
