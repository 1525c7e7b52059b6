# -*- coding: utf-8 -*-
"""测试用小图构造"""

import itertools

import numpy as np

from src.cascade.thresholds import DeltaThreshold, assign_thresholds
from src.graph_core.graph import build_graph


def path_graph(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves):
    """中心为 0，叶子为 1..leaves"""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n):
    return build_graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def delta(n, phi_star=0.18):
    return assign_thresholds(n, DeltaThreshold(phi_star), np.random.default_rng(0))


def from_networkx(nx_graph):
    mapping = {v: i for i, v in enumerate(sorted(nx_graph.nodes()))}
    edges = [(mapping[u], mapping[v]) for u, v in nx_graph.edges()]
    return build_graph(len(mapping), edges, directed=nx_graph.is_directed())
