import random

import pytest
from hypothesis import given, settings, strategies as st

import boardpile.diffusion as diffusion
from boardpile.diffusion import (
    NoRepeatWithinBudget,
    PeriodNotOneOrTwo,
    detect_period,
    equivalent,
    fire,
    fire_complete,
    is_period_config,
    normalize,
    orientation_of,
    run,
)
from boardpile.graphs import Graph, complete, path, star

# Path on five vertices with a preperiod of 3 and a period of 2; the full
# trajectory is pinned down step by step.
P5 = path(5)
P5_START = (0, 2, 0, 4, 1)
P5_TRAJECTORY = [
    (0, 2, 0, 4, 1),
    (1, 0, 2, 2, 2),
    (0, 2, 1, 2, 2),
    (1, 0, 3, 1, 2),
    (0, 2, 1, 3, 1),
    (1, 0, 3, 1, 2),
    (0, 2, 1, 3, 1),
]


@st.composite
def graph_and_stacks(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges = draw(st.sets(st.sampled_from(pairs)))
    else:
        edges = set()
    stacks = draw(st.lists(st.integers(-10, 10), min_size=n, max_size=n))
    return Graph(n, edges), tuple(stacks)


# --- fire ------------------------------------------------------------------


def test_fire_path5_first_step():
    assert fire(P5, P5_START) == (1, 0, 2, 2, 2)


def test_fire_size_mismatch():
    with pytest.raises(ValueError, match="stacks"):
        fire(P5, (1, 2, 3))


def test_fire_constant_config_is_fixed():
    for g in (P5, complete(4), star(6)):
        assert fire(g, (3,) * g.n) == (3,) * g.n


def test_fire_complete_graph_multiset():
    # on K_5 a vertex at 3 gains from its 4 richer neighbours; each 4 gains
    # from the two 5s and pays the 3; each 5 pays its three poorer neighbours
    assert fire(complete(5), (3, 4, 4, 5, 5)) == (7, 5, 5, 2, 2)


# --- fire_complete ---------------------------------------------------------


def test_fire_complete_two_level_example():
    assert fire_complete((0, 0, 4, 4, 4, 4, 4)) == (2, 2, 2, 2, 2, 5, 5)


def test_fire_complete_all_zero_fixed():
    for n in range(1, 8):
        assert fire_complete((0,) * n) == (0,) * n


def test_fire_complete_three_distinct():
    # 0 gains two, 1 stays, 2 loses two: same multiset back
    assert fire_complete((0, 1, 2)) == (0, 1, 2)


def test_fire_complete_rejects_empty():
    with pytest.raises(ValueError, match="empty"):
        fire_complete(())


@settings(deadline=None)
@given(st.lists(st.integers(-10, 10), min_size=1, max_size=10), st.randoms())
def test_fire_complete_matches_labelled_fire(values, rng):
    shuffled = list(values)
    rng.shuffle(shuffled)
    g = complete(len(values))
    assert fire_complete(values) == tuple(sorted(fire(g, shuffled)))


# --- orientation -----------------------------------------------------------


def test_orientation_path5():
    o = orientation_of(P5, (15, 9, 8, 2, 12))
    assert o.arcs == frozenset({(0, 1), (1, 2), (2, 3), (4, 3)})
    assert o.flat == frozenset()


def test_orientation_constant_all_flat():
    o = orientation_of(P5, (7, 7, 7, 7, 7))
    assert o.arcs == frozenset()
    assert o.flat == frozenset(P5.edges)


def test_orientation_triangle_distinct_values():
    o = orientation_of(complete(3), (0, 1, 2))
    assert o.arcs == frozenset({(1, 0), (2, 0), (2, 1)})
    assert o.flat == frozenset()


@settings(deadline=None)
@given(graph_and_stacks())
def test_orientation_consistent_with_firing(gs):
    # net change at a vertex is exactly arcs in minus arcs out
    g, stacks = gs
    o = orientation_of(g, stacks)
    fired = fire(g, stacks)
    for v in range(g.n):
        gain = sum(1 for _, poor in o.arcs if poor == v)
        loss = sum(1 for rich, _ in o.arcs if rich == v)
        assert fired[v] - stacks[v] == gain - loss
    assert len(o.arcs) + len(o.flat) == len(g.edges)


# --- run -------------------------------------------------------------------


def test_run_reproduces_p5_trajectory():
    assert run(P5, P5_START, 6) == P5_TRAJECTORY


def test_run_zero_steps():
    assert run(P5, P5_START, 0) == [P5_START]


def test_run_negative_steps_rejected():
    with pytest.raises(ValueError):
        run(P5, P5_START, -1)


def test_run_composes():
    whole = run(P5, P5_START, 6)
    first = run(P5, P5_START, 2)
    rest = run(P5, first[-1], 4)
    assert whole == first + rest[1:]


# --- detect_period ---------------------------------------------------------


def test_detect_period_p5_fixture():
    report = detect_period(P5, P5_START)
    assert report.preperiod == 3
    assert report.period == 2
    assert report.period_configs == ((1, 0, 3, 1, 2), (0, 2, 1, 3, 1))


def test_detect_period_fixed_config():
    report = detect_period(P5, (0, 0, 0, 0, 0))
    assert (report.preperiod, report.period) == (0, 1)
    assert report.period_configs == ((0, 0, 0, 0, 0),)


def test_detect_period_k5_two_cycle():
    report = detect_period(complete(5), (3, 4, 4, 5, 5))
    assert (report.preperiod, report.period) == (0, 2)


def test_detect_period_configs_fire_cyclically():
    report = detect_period(P5, P5_START)
    p = report.period
    for i, cfg in enumerate(report.period_configs):
        assert fire(P5, cfg) == report.period_configs[(i + 1) % p]


def test_detect_period_budget_exhausted():
    # preperiod is 3, so the first repeat appears at step 5
    with pytest.raises(NoRepeatWithinBudget, match="2 steps"):
        detect_period(P5, P5_START, max_steps=2)


def test_detect_period_surfaces_longer_cycles(monkeypatch):
    # substitute a rotation map, whose cycle on this start has length 3
    monkeypatch.setattr(diffusion, "fire", lambda g, c: c[1:] + c[:1])
    with pytest.raises(PeriodNotOneOrTwo):
        detect_period(complete(3), (0, 1, 2))


def test_detect_period_rejects_bad_budget():
    with pytest.raises(ValueError):
        detect_period(P5, P5_START, max_steps=0)


# --- normalize / equivalent ------------------------------------------------


def test_normalize_shifts_min_to_zero():
    assert normalize((-1, 1, -2, 1, -1)) == (1, 3, 0, 3, 1)
    assert normalize((0, 3, 1)) == (0, 3, 1)
    assert normalize((4, 4, 4)) == (0, 0, 0)


def test_normalize_rejects_empty():
    with pytest.raises(ValueError):
        normalize(())


def test_equivalent_shifted_sequences():
    assert equivalent((1, 0, 1, 0, 1), (0, -1, 0, -1, 0))
    assert equivalent((2, 5), (2, 5))
    assert not equivalent((0, 1), (1, 0))


def test_equivalent_length_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        equivalent((0, 1), (0, 1, 2))


@settings(deadline=None)
@given(st.lists(st.integers(-10, 10), min_size=1, max_size=8), st.integers(-5, 5))
def test_equivalent_under_any_shift(stacks, k):
    assert equivalent(stacks, [s + k for s in stacks])


# --- is_period_config ------------------------------------------------------


def test_is_period_config_examples():
    assert is_period_config(complete(10), (0, 0, 3, 3, 5, 5, 5, 5, 8, 8))
    assert is_period_config(path(4), (2, 2, 2, 2))
    assert is_period_config(star(5), (1, 1, 1, 1, 1))
    assert not is_period_config(complete(2), (0, 3))


def test_is_period_config_matches_zero_preperiod():
    rng = random.Random(8)
    for _ in range(300):
        n = rng.randint(1, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = [e for e in pairs if rng.random() < 0.6]
        g = Graph(n, edges)
        stacks = tuple(rng.randint(-4, 4) for _ in range(n))
        assert is_period_config(g, stacks) == (detect_period(g, stacks).preperiod == 0)


# --- global structural properties ------------------------------------------


@settings(deadline=None)
@given(graph_and_stacks())
def test_fire_conserves_chips(gs):
    g, stacks = gs
    assert sum(fire(g, stacks)) == sum(stacks)


@settings(deadline=None)
@given(graph_and_stacks(), st.integers(-7, 7))
def test_fire_commutes_with_shifts(gs, k):
    g, stacks = gs
    shifted = tuple(s + k for s in stacks)
    assert fire(g, shifted) == tuple(s + k for s in fire(g, stacks))
