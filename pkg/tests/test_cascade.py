# -*- coding: utf-8 -*-
"""阈值、种子选择与级联动态"""

import networkx as nx
import numpy as np
import pytest

from src.cascade import (
    DeltaThreshold,
    Explicit,
    TopDegreeFraction,
    UniformRandom,
    UniformThreshold,
    assign_thresholds,
    brute_force_fixpoint,
    final_active_set,
    is_vulnerable,
    run_cascade,
    select_seeds,
    stability_kappa,
    unactivated_violations,
    vulnerable_fraction,
)
from src.errors import GuardError, ValidationError
from src.generators import gen_ba, gen_price, gen_waxman
from src.graph_core import build_graph, degree_sequence
from tests.helpers import complete_graph, delta, from_networkx, path_graph, star_graph


def _connected_atlas_graphs():
    return [from_networkx(g) for g in nx.graph_atlas_g()[1:] if nx.is_connected(g)]


def test_delta_thresholds():
    rng = np.random.default_rng(0)
    assert list(assign_thresholds(5, DeltaThreshold(0.18), rng).phi) == [0.18] * 5
    assert list(assign_thresholds(3, DeltaThreshold(1.0), rng).phi) == [1.0] * 3
    for bad in (0.0, 1.2):
        with pytest.raises(ValidationError):
            DeltaThreshold(bad)


def test_uniform_thresholds_mean():
    phi = assign_thresholds(10_000, UniformThreshold(0.1, 0.3), np.random.default_rng(1)).phi
    stderr = phi.std(ddof=1) / np.sqrt(phi.size)
    assert abs(phi.mean() - 0.2) < 3 * stderr
    assert phi.min() >= 0.1 and phi.max() <= 0.3


def test_stability_kappa():
    assert stability_kappa(0.18, 10) == 2
    assert stability_kappa(0.18, 4) == 1
    assert stability_kappa(0.5, 0) == 0


@pytest.mark.parametrize("phi,z,expected", [(0.18, 4, True), (0.18, 6, False), (0.18, 5, True), (0.5, 0, False)])
def test_is_vulnerable(phi, z, expected):
    assert is_vulnerable(phi, z) is expected


def test_vulnerable_fraction_counts_strict_rule():
    thresholds = delta(4)
    assert vulnerable_fraction(np.array([0, 4, 5, 6]), thresholds) == pytest.approx(0.5)


def test_star_leaf_seed_low_threshold(star4):
    outcome = run_cascade(star4, delta(5, 0.18), [1], record_trajectory=True)
    assert outcome.final_size == 5
    assert outcome.steps == 2
    assert outcome.trajectory == (1, 2, 5)


def test_star_leaf_seed_high_threshold(star4):
    outcome = run_cascade(star4, delta(5, 0.5), [1])
    assert outcome.final_size == 1
    assert outcome.steps == 0


def test_all_nodes_seeded_saturates():
    g = gen_waxman(60, 5.0, 0.1, np.random.default_rng(2))
    outcome = run_cascade(g, delta(60, 0.9), range(60))
    assert outcome.final_size == 60
    assert outcome.steps == 0


def test_small_graph_examples(p3):
    assert brute_force_fixpoint(p3, delta(3), [0]).final_size == 3
    assert run_cascade(complete_graph(3), delta(3, 0.9), [0]).final_size == 1


def test_seed_validation(p3):
    with pytest.raises(ValidationError):
        run_cascade(p3, delta(3), [])
    with pytest.raises(ValidationError):
        run_cascade(p3, delta(4), [0])
    with pytest.raises(ValidationError):
        run_cascade(p3, delta(3), [3])


def test_duplicate_seeds_are_collapsed(p3):
    outcome = run_cascade(p3, delta(3), [0, 0])
    assert outcome.seed_set == (0,)
    assert outcome.final_size == 3


def test_brute_force_guard():
    with pytest.raises(GuardError):
        brute_force_fixpoint(path_graph(21), delta(21), [0])


@pytest.mark.parametrize("phi_star", [0.18, 0.4, 0.9])
def test_matches_brute_force_on_connected_small_graphs(phi_star):
    for g in _connected_atlas_graphs():
        thresholds = delta(g.n, phi_star)
        for seed in range(g.n):
            fast = run_cascade(g, thresholds, [seed], record_trajectory=True)
            slow = brute_force_fixpoint(g, thresholds, [seed])
            assert (fast.final_size, fast.steps, fast.trajectory) == (slow.final_size, slow.steps, slow.trajectory)


@pytest.mark.parametrize("seed", range(20))
def test_matches_brute_force_on_directed_graphs(seed):
    rng = np.random.default_rng(seed)
    n = 12
    edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.2]
    g = build_graph(n, edges, directed=True)
    thresholds = assign_thresholds(n, UniformThreshold(0.1, 0.6), rng)
    seeds = rng.choice(n, size=2, replace=False).tolist()
    fast = run_cascade(g, thresholds, seeds, record_trajectory=True)
    slow = brute_force_fixpoint(g, thresholds, seeds)
    assert (fast.final_size, fast.steps, fast.trajectory) == (slow.final_size, slow.steps, slow.trajectory)


def test_directed_influence_follows_edges():
    # 0 -> 1：0 关注 1，1 激活后影响 0，反之不成立
    g = build_graph(2, [(0, 1)], directed=True)
    assert run_cascade(g, delta(2), [1]).final_size == 2
    assert run_cascade(g, delta(2), [0]).final_size == 1


def test_directed_price_root_reaches_citing_nodes():
    g = gen_price(300, 1.0, True, np.random.default_rng(5))
    thresholds = delta(g.n)
    active = final_active_set(g, thresholds, [0])
    citing = [v for v in g.in_neighbors(0) if len(g.neighbors(v)) <= 5]
    assert 1 in citing
    assert all(active[v] for v in citing)
    assert unactivated_violations(g, thresholds, active) == []
    # 最新节点没有被任何节点关注
    assert run_cascade(g, thresholds, [g.n - 1]).final_size == 1


@pytest.mark.parametrize("leaves", range(1, 9))
def test_single_active_neighbor_activates_only_vulnerable_nodes(leaves):
    # 星形图中心只可能在第一轮被激活
    star = star_graph(leaves)
    rng = np.random.default_rng(leaves)
    for _ in range(25):
        thresholds = assign_thresholds(star.n, UniformThreshold(0.05, 0.6), rng)
        active = final_active_set(star, thresholds, [1])
        assert bool(active[0]) == is_vulnerable(float(thresholds.phi[0]), leaves)


def test_fixed_point_has_no_violations():
    g = gen_waxman(300, 5.0, 0.02, np.random.default_rng(6))
    thresholds = delta(g.n)
    active = final_active_set(g, thresholds, [0])
    assert unactivated_violations(g, thresholds, active) == []
    assert int(active.sum()) == run_cascade(g, thresholds, [0]).final_size


def test_trajectory_is_monotone():
    g = gen_ba(400, 2, np.random.default_rng(8))
    outcome = run_cascade(g, delta(g.n), [5], record_trajectory=True)
    assert list(outcome.trajectory) == sorted(outcome.trajectory)
    assert outcome.trajectory[-1] == outcome.final_size
    assert len(outcome.trajectory) == outcome.steps + 1


def test_larger_seed_set_never_shrinks_cascade():
    g = gen_waxman(200, 5.0, 0.05, np.random.default_rng(10))
    thresholds = delta(g.n, 0.3)
    for seed in range(0, 200, 20):
        base = final_active_set(g, thresholds, [seed])
        larger = final_active_set(g, thresholds, [seed, (seed + 7) % 200])
        assert (larger >= base).all()


def test_cascade_is_deterministic():
    g = gen_waxman(200, 5.0, 0.05, np.random.default_rng(10))
    thresholds = delta(g.n)
    assert run_cascade(g, thresholds, [3], True) == run_cascade(g, thresholds, [3], True)


def test_select_seeds_strategies():
    star = star_graph(9)
    rng = np.random.default_rng(0)
    assert {select_seeds(TopDegreeFraction(0.1), star, rng)[0] for _ in range(20)} == {0}
    assert select_seeds(Explicit((3,)), star, rng) == [3]
    assert 0 <= select_seeds(UniformRandom(), star, rng)[0] < star.n
    with pytest.raises(ValidationError):
        select_seeds(Explicit((10,)), star, rng)
    with pytest.raises(ValidationError):
        select_seeds(UniformRandom(), build_graph(0, []), rng)


def test_hub_seeds_have_top_percentile_degree():
    g = gen_ba(10000, 3, np.random.default_rng(3))
    degrees = degree_sequence(g)
    cutoff = np.percentile(degrees, 99)
    rng = np.random.default_rng(4)
    for _ in range(50):
        node = select_seeds(TopDegreeFraction(0.01), g, rng)[0]
        assert degrees[node] >= cutoff
