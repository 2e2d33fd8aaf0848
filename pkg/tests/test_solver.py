import pytest
from hypothesis import given, strategies as st

from pumpkinvds.branching import RuleId
from pumpkinvds.digraph import Digraph
from pumpkinvds.generator import make_pumpkin, random_digraph
from pumpkinvds.oracle import brute_force_pvds, brute_force_rpvds
from pumpkinvds.recognizer import is_pumpkin
from pumpkinvds.reduction import Instance
from pumpkinvds.solver import SearchStats, Solution, SolverError, solve_pvds, solve_rpvds, verify_certificate

from conftest import digraphs, rooted_digraphs
from instances import HANDCRAFTED, SOLVER_EXAMPLE


def test_pumpkin_solves_at_zero():
    g, s, t = make_pumpkin([2])
    sol, stats = solve_rpvds(Instance(g, 0, s, t))
    assert sol == Solution(frozenset())
    assert stats.nodes == 1 and stats.leaves == 1 and stats.reductions["R3"] == 1


def test_solver_example():
    # oracle first: {x} = {4} is the unique minimum
    assert brute_force_rpvds(Instance(SOLVER_EXAMPLE, 1, 0, 1)).witness == {4}
    sol, _ = solve_rpvds(Instance(SOLVER_EXAMPLE, 1, 0, 1))
    assert sol.deleted == {4}
    assert not brute_force_rpvds(Instance(SOLVER_EXAMPLE, 0, 0, 1)).yes
    assert solve_rpvds(Instance(SOLVER_EXAMPLE, 0, 0, 1))[0] is None


def test_antiparallel_blocker():
    # s=0 -> a=2 -> t=1 with a <-> b=3
    g = Digraph.from_edges(4, [(0, 2), (2, 1), (2, 3), (3, 2)])
    assert brute_force_rpvds(Instance(g, 1, 0, 1)).min_size == 1
    sol, stats = solve_rpvds(Instance(g, 1, 0, 1))
    assert sol.deleted == {3}
    assert stats.rule_firings[RuleId(1)] == 1


@pytest.mark.parametrize("name", sorted(HANDCRAFTED))
def test_handcrafted_against_oracle(name):
    inst = HANDCRAFTED[name]
    sol, _ = solve_rpvds(inst)
    assert (sol is not None) == brute_force_rpvds(inst).yes


def test_budget_is_capped():
    g = Digraph.from_edges(4, [(0, 2), (2, 1), (2, 3), (3, 2)])
    sol, stats = solve_rpvds(Instance(g, 1000, 0, 1))
    assert sol is not None and stats.max_depth <= 3


def test_negative_budget():
    g, s, t = make_pumpkin([2])
    assert solve_rpvds(Instance(g, -1, s, t))[0] is None


def test_verify_certificate_rejects_bad_sets():
    g = Digraph.from_edges(4, [(0, 2), (2, 1), (2, 3), (3, 2)])
    inst = Instance(g, 1, 0, 1)
    with pytest.raises(SolverError):
        verify_certificate(inst, Solution(frozenset({2, 3})))
    with pytest.raises(SolverError):
        verify_certificate(inst, Solution(frozenset({2})))
    with pytest.raises(SolverError):
        verify_certificate(inst, Solution(frozenset({0})))


def test_pvds_examples():
    g, _, _ = make_pumpkin([2, 2])
    res = solve_pvds(g, 0)
    assert (res.s, res.t, res.solution.deleted) == (0, 3, frozenset())
    cycle = Digraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert solve_pvds(cycle, 0) is None
    assert len(solve_pvds(cycle, 1).solution) == 1
    assert solve_pvds(Digraph.from_edges(1, []), 5) is None


def test_pvds_parallel_matches_serial():
    for seed in range(4):
        g = random_digraph(5, 0.4, seed)
        for k in range(3):
            a, b = SearchStats(), SearchStats()
            assert solve_pvds(g, k, stats=a) == solve_pvds(g, k, jobs=2, stats=b)
            assert a == b


@given(rooted_digraphs(max_n=7), st.integers(0, 5))
def test_agrees_with_oracle(case, k):
    g, s, t = case
    inst = Instance(g, k, s, t)
    sol, stats = solve_rpvds(inst)
    assert (sol is not None) == brute_force_rpvds(inst).yes
    assert 1 <= stats.nodes and stats.leaves <= stats.nodes
    assert stats.nodes <= 10 * 2 ** max(k, 0)
    if sol is not None:
        assert len(sol) <= k and not sol.deleted & {s, t}
        assert is_pumpkin(g.delete_vertices(sol.deleted), s, t)


@given(rooted_digraphs(max_n=7))
def test_smallest_yes_budget_is_optimum(case):
    g, s, t = case
    opt = brute_force_rpvds(Instance(g, len(g), s, t))
    yes_at = [k for k in range(len(g) - 1) if solve_rpvds(Instance(g, k, s, t))[0] is not None]
    assert (yes_at[0] if yes_at else None) == opt.min_size


@given(rooted_digraphs(max_n=7), st.integers(0, 4))
def test_deterministic(case, k):
    inst = Instance(case[0], k, case[1], case[2])
    assert solve_rpvds(inst) == solve_rpvds(inst)


@given(digraphs(max_n=5), st.integers(0, 3))
def test_pvds_agrees_with_oracle(g, k):
    res = solve_pvds(g, k)
    assert (res is not None) == brute_force_pvds(g, k).yes
    if res is not None:
        assert is_pumpkin(g.delete_vertices(res.solution.deleted), res.s, res.t)
