# -*- coding: utf-8 -*-
"""随机图生成器、G(s) 标定与随机流"""

import math

import numpy as np
import pytest
from scipy import stats

from src.errors import InfeasibleParameterError, ValidationError
from src.generators import (
    BASpec,
    ERSpec,
    PriceSpec,
    RngStream,
    WaxmanSpec,
    derive_seed,
    gen_ba,
    gen_er,
    gen_price,
    gen_waxman,
    generate,
    laplace_G,
    line_picking_pdf,
    truncated_poisson,
    waxman_q,
)
from src.graph_core import (
    average_clustering,
    components,
    degree_sequence,
    degree_tail_slope,
    in_degree_sequence,
    mean_degree,
)


def _pair_distances(count, seed):
    rng = np.random.default_rng(seed)
    a = rng.random((count, 2))
    b = rng.random((count, 2))
    return np.linalg.norm(a - b, axis=1)


def test_line_picking_pdf_endpoints():
    assert line_picking_pdf(0.0) == 0.0
    assert line_picking_pdf(math.sqrt(2)) == pytest.approx(0.0, abs=1e-9)
    for t in (-0.1, 1.5):
        with pytest.raises(ValidationError):
            line_picking_pdf(t)


def test_line_picking_pdf_is_continuous_at_one():
    assert line_picking_pdf(1.0 - 1e-9) == pytest.approx(line_picking_pdf(1.0 + 1e-9), rel=1e-6)


def test_line_picking_pdf_matches_histogram():
    count, width = 2_000_000, 0.01
    d = _pair_distances(count, seed=1)
    hits = np.count_nonzero(np.abs(d - 0.5) < width / 2)
    estimate = hits / (count * width)
    stderr = math.sqrt(hits) / (count * width)
    assert abs(estimate - line_picking_pdf(0.5)) < 3 * stderr


def test_laplace_G_at_zero_is_one():
    assert laplace_G(0.0) == pytest.approx(1.0, abs=1e-7)


def test_laplace_G_decreases_to_zero():
    values = [laplace_G(s) for s in (0.0, 1.0, 5.0, 10.0, 100.0)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert laplace_G(1000.0) < 1e-4
    with pytest.raises(ValidationError):
        laplace_G(-1.0)


@pytest.mark.parametrize("s", [1.0, 5.0, 10.0])
def test_laplace_G_matches_monte_carlo(s):
    samples = np.exp(-s * _pair_distances(1_000_000, seed=int(s)))
    stderr = samples.std(ddof=1) / math.sqrt(samples.size)
    assert abs(samples.mean() - laplace_G(s)) < 3 * stderr


def test_waxman_q_examples():
    assert waxman_q(10000, 6, 0) == pytest.approx(6 / 9999, rel=1e-6)
    assert waxman_q(10000, 6, 10) == pytest.approx(6 / (9999 * laplace_G(10.0)))


def test_waxman_q_infeasible_names_maximum():
    with pytest.raises(InfeasibleParameterError) as exc:
        waxman_q(10, 20, 0)
    assert exc.value.max_achievable == pytest.approx(9.0, rel=1e-6)
    assert "9" in str(exc.value)


def test_er_extremes():
    rng = np.random.default_rng(0)
    assert gen_er(5, 0.0, rng).edge_count == 0
    assert gen_er(5, 1.0, rng).edge_count == 10


def test_er_mean_degree_matches_expectation():
    n, z = 2000, 6.0
    degrees = [mean_degree(generate(ERSpec(n, z / (n - 1)), RngStream(3, i))) for i in range(10)]
    assert np.mean(degrees) == pytest.approx(z, rel=0.03)


def test_spec_validation():
    with pytest.raises(ValidationError):
        ERSpec(10, 1.5)
    with pytest.raises(ValidationError):
        WaxmanSpec(10, -1.0, 4.0)
    with pytest.raises(ValidationError):
        BASpec(3, 3)
    with pytest.raises(ValidationError):
        PriceSpec(10, 0.0)


def test_waxman_positions_and_determinism():
    spec = WaxmanSpec(300, 10.0, 4.0)
    a = generate(spec, RngStream(42))
    b = generate(spec, RngStream(42))
    c = generate(spec, RngStream(42, stream_id=1))
    assert a == b
    assert a != c
    assert a.positions.shape == (300, 2)
    assert ((a.positions >= 0) & (a.positions <= 1)).all()


@pytest.mark.parametrize("s,z", [(0.0, 3.0), (5.0, 6.0), (10.0, 6.0)])
def test_waxman_calibration(s, z):
    n = 2000
    degrees = [mean_degree(generate(WaxmanSpec(n, s, z), RngStream(7, i))) for i in range(10)]
    assert np.mean(degrees) == pytest.approx(z, rel=0.03)


def test_waxman_rejects_bad_q():
    with pytest.raises(ValidationError):
        gen_waxman(10, 1.0, 0.0, np.random.default_rng(0))


def test_er_node_degree_is_binomial():
    n, q = 30, 0.15
    rng = np.random.default_rng(21)
    counts = np.bincount([len(gen_er(n, q, rng).neighbors(0)) for _ in range(10_000)], minlength=n)
    # 合并尾部，保证每个格子的期望频数不小于 5
    expected = stats.binom.pmf(np.arange(n), n - 1, q) * 10_000
    edges = [0, 2, 3, 4, 5, 6, 7, 9, n]
    observed_bins = [counts[a:b].sum() for a, b in zip(edges, edges[1:])]
    expected_bins = [expected[a:b].sum() for a, b in zip(edges, edges[1:])]
    expected_bins[-1] += 10_000 - sum(expected_bins)
    assert stats.chisquare(observed_bins, expected_bins).pvalue > 0.01


def test_waxman_without_locality_matches_er():
    n, z = 400, 4.0
    q = waxman_q(n, z, 0.0)

    def moments(make):
        degrees = [degree_sequence(make(i)) for i in range(30)]
        return np.array([d.mean() for d in degrees]), np.array([d.var(ddof=1) for d in degrees])

    wax_mean, wax_var = moments(lambda i: gen_waxman(n, 0.0, q, np.random.default_rng(100 + i)))
    er_mean, er_var = moments(lambda i: gen_er(n, q, np.random.default_rng(200 + i)))
    for a, b in ((wax_mean, er_mean), (wax_var, er_var)):
        stderr = math.sqrt(a.var(ddof=1) / a.size + b.var(ddof=1) / b.size)
        assert abs(a.mean() - b.mean()) < 3 * stderr


def test_two_node_waxman_edge_probability():
    rng = np.random.default_rng(31)
    draws = 100_000
    hits = sum(gen_waxman(2, 1.0, 1.0, rng).edge_count for _ in range(draws))
    p = laplace_G(1.0)
    assert abs(hits / draws - p) < 3 * math.sqrt(p * (1 - p) / draws)


def test_locality_raises_clustering():
    s0 = average_clustering(generate(WaxmanSpec(1000, 0.0, 6.0), RngStream(17)))
    s10 = average_clustering(generate(WaxmanSpec(1000, 10.0, 6.0), RngStream(17)))
    assert s10 > s0


def test_ba_edge_count():
    g = gen_ba(10000, 3, np.random.default_rng(1))
    assert g.edge_count == (10000 - 3) * 3
    assert mean_degree(g) == pytest.approx(5.9982)


def test_ba_four_nodes_forced_star():
    g = gen_ba(4, 3, np.random.default_rng(5))
    assert g.edge_list() == [(0, 3), (1, 3), (2, 3)]
    assert list(degree_sequence(g)) == [1, 1, 1, 3]


def test_ba_rejects_m_not_below_n():
    with pytest.raises(ValidationError):
        gen_ba(3, 3, np.random.default_rng(0))


def test_truncated_poisson_never_zero():
    rng = np.random.default_rng(0)
    assert min(truncated_poisson(0.5, rng) for _ in range(500)) >= 1


def test_price_directed_is_acyclic_with_positive_out_degree():
    g = gen_price(500, 3.0, True, np.random.default_rng(2))
    assert g.directed
    assert all(u > v for u, v in g.edge_list())
    out_degrees = degree_sequence(g)
    assert out_degrees[0] == 0
    assert (out_degrees[1:] >= 1).all()
    assert all(out_degrees[i] <= i for i in range(g.n))
    assert in_degree_sequence(g).sum() == g.edge_count


def test_price_small_c_still_connects_every_arrival():
    g = gen_price(4, 0.5, False, np.random.default_rng(4))
    assert g.edge_count >= 3
    for new in range(1, 4):
        assert any(v < new for v in g.neighbors(new))


def test_price_undirected_mean_degree():
    c = 3.0
    expected = 2 * c / (1 - math.exp(-c))
    degrees = [mean_degree(generate(PriceSpec(5000, c), RngStream(8, i))) for i in range(10)]
    assert np.mean(degrees) == pytest.approx(expected, rel=0.10)


def test_rng_stream_purposes_are_independent():
    stream = RngStream(5)
    a = stream.generator(0).random(4)
    b = stream.generator(1).random(4)
    assert not np.array_equal(a, b)
    assert np.array_equal(a, RngStream(5).generator(0).random(4))
    with pytest.raises(ValidationError):
        RngStream(-1)


def test_derive_seed_is_stable_and_sensitive():
    assert derive_seed(1, "s", 2.0) == derive_seed(1, "s", 2.0)
    assert derive_seed(1, "s", 2.0) != derive_seed(1, "s", 4.0)
    assert 0 <= derive_seed(123, "z", 7.0) < 2 ** 64


@pytest.mark.slow
def test_ba_degree_tail_slope():
    slopes = [degree_tail_slope(gen_ba(10000, 3, np.random.default_rng(i)), min_degree=3) for i in range(10)]
    assert np.mean(slopes) == pytest.approx(-2.0, abs=0.5)


@pytest.mark.slow
@pytest.mark.parametrize("s", [0.0, 5.0, 10.0])
@pytest.mark.parametrize("z", [3.0, 6.0])
def test_waxman_calibration_full_scale(s, z):
    degrees = [mean_degree(generate(WaxmanSpec(5000, s, z), RngStream(11, i))) for i in range(10)]
    assert np.mean(degrees) == pytest.approx(z, rel=0.03)


@pytest.mark.slow
def test_waxman_giant_component_spans_network():
    sizes = [components(generate(WaxmanSpec(5000, 10.0, 6.0), RngStream(19, i))).giant_size for i in range(20)]
    assert np.mean(sizes) > 0.9 * 5000
