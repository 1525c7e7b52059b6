#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
不可变图结构
无向图邻接对称；有向图同时保存出邻居与入邻居，级联动态读取出邻居（节点所关注的对象）。
"""

import logging
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from src.errors import ValidationError

logger = logging.getLogger(__name__)

# 约定，写入输出元数据
CONVENTIONS = {
    "directed_degree": "out-degree",
    "directed_components": "weak connectivity",
    "cascade_influence": "out-neighbors (nodes followed), normalized by out-degree; influence flows old->new in directed Price",
    "betweenness_normalization": "(n-1)(n-2)/2 on the undirected skeleton",
}


class Graph:
    """不可变图：节点为 0..n-1，无自环、无重边"""

    __slots__ = ("_n", "_directed", "_out", "_in", "_positions", "_edge_count")

    def __init__(self, n: int, out_adj: Tuple[Tuple[int, ...], ...], in_adj: Tuple[Tuple[int, ...], ...],
                 directed: bool, positions: Optional[np.ndarray], edge_count: int):
        # 请使用 build_graph 构造，这里不做校验
        self._n = n
        self._out = out_adj
        self._in = in_adj
        self._directed = directed
        self._positions = positions
        self._edge_count = edge_count

    @property
    def n(self) -> int:
        return self._n

    @property
    def directed(self) -> bool:
        return self._directed

    @property
    def positions(self) -> Optional[np.ndarray]:
        return self._positions

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def neighbors(self, i: int) -> Tuple[int, ...]:
        """出邻居（无向图即邻居）"""
        return self._out[i]

    def in_neighbors(self, i: int) -> Tuple[int, ...]:
        return self._in[i]

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._out

    @property
    def in_adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._in

    def edge_list(self) -> list:
        """按 (u, v) 排序的边表；无向图只给出 u < v"""
        edges = []
        for u, nbrs in enumerate(self._out):
            for v in nbrs:
                if self._directed or u < v:
                    edges.append((u, v))
        return edges

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if (self._n, self._directed, self._out) != (other._n, other._directed, other._out):
            return False
        if self._positions is None or other._positions is None:
            return self._positions is None and other._positions is None
        return bool(np.array_equal(self._positions, other._positions))

    __hash__ = None

    def __repr__(self) -> str:
        kind = "directed" if self._directed else "undirected"
        spatial = ", spatial" if self._positions is not None else ""
        return f"Graph(n={self._n}, e={self._edge_count}, {kind}{spatial})"


def build_graph(n: int, edge_list: Iterable[Sequence[int]], directed: bool = False,
                positions: Optional[Sequence[Sequence[float]]] = None) -> Graph:
    """
    从边表构造图

    Args:
        n: 节点数
        edge_list: (u, v) 对
        directed: 是否有向
        positions: 可选的单位正方形坐标，每个节点一行

    Returns:
        Graph: 满足全部不变式的图
    """
    if n < 0:
        raise ValidationError(f"节点数必须非负: n={n}")

    out_sets = [set() for _ in range(n)]
    in_sets = out_sets if not directed else [set() for _ in range(n)]
    edge_count = 0

    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ValidationError(f"边 ({u}, {v}) 的端点超出范围 [0, {n})")
        if u == v:
            raise ValidationError(f"不允许自环: ({u}, {v})")
        if v in out_sets[u]:
            raise ValidationError(f"重复边: ({u}, {v})")
        out_sets[u].add(v)
        if directed:
            in_sets[v].add(u)
        else:
            out_sets[v].add(u)
        edge_count += 1

    out_adj = tuple(tuple(sorted(s)) for s in out_sets)
    in_adj = out_adj if not directed else tuple(tuple(sorted(s)) for s in in_sets)

    pos_array = None
    if positions is not None:
        pos_array = np.array(positions, dtype=float).reshape(-1, 2) if n > 0 else np.zeros((0, 2))
        if pos_array.shape != (n, 2):
            raise ValidationError(f"坐标数量 {pos_array.shape[0]} 与节点数 {n} 不一致")
        if np.any(pos_array < 0.0) or np.any(pos_array > 1.0):
            raise ValidationError("坐标必须位于单位正方形 [0,1]² 内")
        pos_array.flags.writeable = False

    return Graph(n, out_adj, in_adj, bool(directed), pos_array, edge_count)


def undirected_skeleton(g: Graph) -> Graph:
    """有向图的无向骨架；无向图原样返回"""
    if not g.directed:
        return g
    pairs = set()
    for u, v in g.edge_list():
        pairs.add((min(u, v), max(u, v)))
    return build_graph(g.n, sorted(pairs), directed=False, positions=g.positions)
