#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
图结构分析：度、连通分量、聚类系数、介数中心性
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from joblib import Parallel, delayed
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from src.errors import ValidationError
from src.graph_core.graph import Graph, undirected_skeleton

logger = logging.getLogger(__name__)

# 介数按固定大小的源节点块累加，块内与块间的求和顺序与线程数无关
BETWEENNESS_CHUNK = 256


@dataclass(frozen=True)
class ComponentPartition:
    """连通分量划分"""
    component_id: np.ndarray
    sizes: Tuple[int, ...]
    giant_size: int

    @property
    def count(self) -> int:
        return len(self.sizes)


@dataclass(frozen=True)
class BetweennessResult:
    """归一化介数；n < 3 时 degenerate 为真且全部为 0"""
    values: np.ndarray
    degenerate: bool = False


def _check_node(g: Graph, i: int) -> None:
    if not (0 <= i < g.n):
        raise ValidationError(f"节点 {i} 超出范围 [0, {g.n})")


def degree(g: Graph, i: int) -> int:
    """节点度；有向图为出度"""
    _check_node(g, i)
    return len(g.neighbors(i))


def in_degree(g: Graph, i: int) -> int:
    """入度；无向图等于度"""
    _check_node(g, i)
    return len(g.in_neighbors(i))


def degree_sequence(g: Graph) -> np.ndarray:
    return np.fromiter((len(nbrs) for nbrs in g.adjacency), dtype=np.int64, count=g.n)


def in_degree_sequence(g: Graph) -> np.ndarray:
    return np.fromiter((len(nbrs) for nbrs in g.in_adjacency), dtype=np.int64, count=g.n)


def mean_degree(g: Graph) -> float:
    """平均度 z；无向图为 2e/n"""
    if g.n == 0:
        raise ValidationError("空图没有平均度")
    return float(degree_sequence(g).sum()) / g.n


def components(g: Graph) -> ComponentPartition:
    """连通分量；有向图使用弱连通"""
    if g.n == 0:
        return ComponentPartition(np.zeros(0, dtype=np.int64), (), 0)

    edges = g.edge_list()
    rows = np.fromiter((u for u, _ in edges), dtype=np.int64, count=len(edges))
    cols = np.fromiter((v for _, v in edges), dtype=np.int64, count=len(edges))
    matrix = csr_matrix((np.ones(len(edges), dtype=np.int8), (rows, cols)), shape=(g.n, g.n))
    _, labels = connected_components(matrix, directed=g.directed, connection="weak")

    counts = np.bincount(labels)
    sizes = tuple(sorted((int(c) for c in counts), reverse=True))
    return ComponentPartition(labels.astype(np.int64), sizes, sizes[0])


def giant_component_nodes(g: Graph) -> np.ndarray:
    """最大连通分量的节点掩码（同样大小时取编号最小的分量）"""
    partition = components(g)
    if g.n == 0:
        return np.zeros(0, dtype=bool)
    counts = np.bincount(partition.component_id)
    return partition.component_id == int(np.argmax(counts))


def _brandes_partial(adj: Tuple[Tuple[int, ...], ...], sources: Sequence[int]) -> List[float]:
    """对一组源节点做 BFS + 依赖回传，返回未归一化的部分和"""
    n = len(adj)
    cb = [0.0] * n
    for s in sources:
        sigma = [0] * n
        dist = [-1] * n
        preds: dict = {}
        stack = []
        sigma[s] = 1
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            dv = dist[v] + 1
            sv = sigma[v]
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv
                    queue.append(w)
                    preds[w] = [v]
                    sigma[w] = sv
                elif dist[w] == dv:
                    sigma[w] += sv
                    preds[w].append(v)

        delta = dict.fromkeys(stack, 0.0)
        while stack:
            w = stack.pop()
            if w == s:
                continue
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            cb[w] += delta[w]
    return cb


def betweenness(g: Graph, n_jobs: int = 1) -> BetweennessResult:
    """
    精确最短路介数（Brandes 累加），按 (n-1)(n-2)/2 归一化到 [0,1]

    有向图在无向骨架上计算。

    Args:
        g: 图
        n_jobs: joblib 并行数；结果与并行数无关
    """
    n = g.n
    if n < 3:
        logger.warning(f"⚠️ n={n} < 3，介数归一化无定义，返回全零")
        return BetweennessResult(np.zeros(n), degenerate=True)

    adj = undirected_skeleton(g).adjacency
    chunks = [range(start, min(start + BETWEENNESS_CHUNK, n)) for start in range(0, n, BETWEENNESS_CHUNK)]

    if n_jobs == 1 or len(chunks) == 1:
        partials = [_brandes_partial(adj, chunk) for chunk in chunks]
    else:
        partials = Parallel(n_jobs=n_jobs)(delayed(_brandes_partial)(adj, chunk) for chunk in chunks)

    raw = np.zeros(n)
    for part in partials:
        raw += np.asarray(part)

    # 无向图每对节点被计两次
    values = raw / ((n - 1) * (n - 2))
    return BetweennessResult(values, degenerate=False)


def high_betweenness_mean_degree(g: Graph, tau: float, n_jobs: int = 1,
                                 centrality: Optional[np.ndarray] = None) -> Optional[float]:
    """
    介数严格大于 tau 的节点的平均度

    Returns:
        平均度；没有合格节点时返回 None
    """
    if not (0.0 <= tau <= 1.0):
        raise ValidationError(f"tau 必须在 [0,1] 内: {tau}")
    if centrality is None:
        centrality = betweenness(g, n_jobs=n_jobs).values
    mask = centrality > tau
    if not mask.any():
        return None
    return float(degree_sequence(undirected_skeleton(g))[mask].mean())


def average_clustering(g: Graph) -> float:
    """平均局部聚类系数；度小于 2 的节点计 0"""
    if g.n == 0:
        return 0.0
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(undirected_skeleton(g).edge_list())
    return float(nx.average_clustering(nx_graph))


def degree_tail_slope(g: Graph, min_degree: int = 1) -> float:
    """度分布 CCDF 的双对数斜率（粗略检查，非严格幂律拟合）"""
    degrees = degree_sequence(undirected_skeleton(g))
    degrees = np.sort(degrees[degrees >= min_degree])
    if degrees.size < 2:
        raise ValidationError("度不少于 min_degree 的节点太少，无法估计斜率")
    values, first_index = np.unique(degrees, return_index=True)
    ccdf = (degrees.size - first_index) / degrees.size
    if values.size < 2:
        raise ValidationError("度只有一种取值，无法估计斜率")
    slope, _ = np.polyfit(np.log(values), np.log(ccdf), 1)
    return float(slope)
