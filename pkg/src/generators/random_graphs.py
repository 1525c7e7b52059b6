#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
四类随机图生成器：Erdős–Rényi、Waxman、Barabási–Albert、Price

所有生成器只依赖传入的 numpy Generator，相同随机流产生相同边表。
"""

import logging
from dataclasses import dataclass
from typing import List, Union

import numpy as np

from src.errors import ValidationError
from src.generators.line_picking import waxman_q
from src.generators.rng_streams import PURPOSE_GRAPH, RngStream
from src.graph_core.graph import Graph, build_graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ERSpec:
    n: int
    q: float

    def __post_init__(self):
        _check_n(self.n)
        if not (0.0 < self.q <= 1.0):
            raise ValidationError(f"ER 连边概率 q 必须在 (0,1] 内: {self.q}")


@dataclass(frozen=True)
class WaxmanSpec:
    n: int
    s: float
    target_z: float

    def __post_init__(self):
        _check_n(self.n)
        if self.s < 0:
            raise ValidationError(f"Waxman 衰减参数 s 必须非负: {self.s}")
        if self.target_z <= 0:
            raise ValidationError(f"Waxman 目标平均度必须为正: {self.target_z}")


@dataclass(frozen=True)
class BASpec:
    n: int
    m: int

    def __post_init__(self):
        _check_n(self.n)
        if not (1 <= self.m < self.n):
            raise ValidationError(f"BA 参数需满足 1 ≤ m < n: m={self.m}, n={self.n}")


@dataclass(frozen=True)
class PriceSpec:
    n: int
    c: float
    directed: bool = False

    def __post_init__(self):
        _check_n(self.n)
        if self.c <= 0:
            raise ValidationError(f"Price 平均初始连接数 c 必须为正: {self.c}")


GeneratorSpec = Union[ERSpec, WaxmanSpec, BASpec, PriceSpec]


def _check_n(n: int) -> None:
    if n < 1:
        raise ValidationError(f"节点数必须 ≥ 1: n={n}")


def gen_er(n: int, q: float, rng: np.random.Generator) -> Graph:
    """G(n, q)：每个无序对独立以概率 q 连边"""
    if not (0.0 <= q <= 1.0):
        raise ValidationError(f"连边概率 q 必须在 [0,1] 内: {q}")
    edges = []
    for i in range(n - 1):
        hits = np.flatnonzero(rng.random(n - i - 1) < q)
        edges.extend((i, i + 1 + int(j)) for j in hits)
    return build_graph(n, edges, directed=False)


def gen_waxman(n: int, s: float, q: float, rng: np.random.Generator) -> Graph:
    """Waxman 图：单位正方形均匀撒点，u、v 以概率 q·exp(-s·d(u,v)) 连边（欧氏距离，无环面）"""
    if not (0.0 < q <= 1.0):
        raise ValidationError(f"连边概率 q 必须在 (0,1] 内: {q}")
    if s < 0:
        raise ValidationError(f"衰减参数 s 必须非负: {s}")
    positions = rng.random((n, 2))
    edges = []
    for i in range(n - 1):
        diff = positions[i + 1:] - positions[i]
        dist = np.sqrt(np.einsum('ij,ij->i', diff, diff))
        prob = q * np.exp(-s * dist)
        hits = np.flatnonzero(rng.random(n - i - 1) < prob)
        edges.extend((i, i + 1 + int(j)) for j in hits)
    return build_graph(n, edges, directed=False, positions=positions)


def _preferential_targets(pool: List[int], k: int, rng: np.random.Generator) -> List[int]:
    """从“按度重复”的节点池中不放回地抽 k 个不同节点（概率正比于度）"""
    chosen = set()
    size = len(pool)
    while len(chosen) < k:
        chosen.add(pool[int(rng.integers(size))])
    return sorted(chosen)


def gen_ba(n: int, m: int, rng: np.random.Generator) -> Graph:
    """
    Barabási–Albert 优先连接
    从 m 个孤立种子节点开始，第一个新节点连接全部种子，之后每个新节点按度比例连接 m 个不同的旧节点。
    边数恰为 (n-m)·m。
    """
    if not (1 <= m < n):
        raise ValidationError(f"BA 参数需满足 1 ≤ m < n: m={m}, n={n}")
    edges = []
    pool: List[int] = []
    for new in range(m, n):
        targets = list(range(m)) if new == m else _preferential_targets(pool, m, rng)
        for t in targets:
            edges.append((new, t))
        pool.extend(targets)
        pool.extend([new] * len(targets))
    return build_graph(n, edges, directed=False)


def truncated_poisson(c: float, rng: np.random.Generator) -> int:
    """零截断 Poisson(c)：拒绝 0"""
    while True:
        value = int(rng.poisson(c))
        if value >= 1:
            return value


def gen_price(n: int, c: float, directed: bool, rng: np.random.Generator) -> Graph:
    """
    Price 图：与 BA 相同的生长过程，但每个新节点的连接数 c_i 取零截断 Poisson(c)，
    并以现有节点数为上限。有向版本中每条边由新节点指向旧节点。
    """
    if c <= 0:
        raise ValidationError(f"Price 平均初始连接数 c 必须为正: {c}")
    edges = []
    pool: List[int] = []
    for new in range(1, n):
        k = min(truncated_poisson(c, rng), new)
        targets = list(range(new)) if k == new else _preferential_targets(pool, k, rng)
        for t in targets:
            edges.append((new, t))
        pool.extend(targets)
        pool.extend([new] * len(targets))
    return build_graph(n, edges, directed=directed)


def resolve_er_q(spec: GeneratorSpec) -> float:
    """ER/Waxman 的实际连边概率；Waxman 走 G(s) 标定"""
    if isinstance(spec, ERSpec):
        return spec.q
    if isinstance(spec, WaxmanSpec):
        return waxman_q(spec.n, spec.target_z, spec.s)
    raise ValidationError(f"{type(spec).__name__} 没有连边概率 q")


def generate(spec: GeneratorSpec, stream: RngStream) -> Graph:
    """按生成器规格和随机流生成一个实现"""
    rng = stream.generator(PURPOSE_GRAPH)
    if isinstance(spec, ERSpec):
        return gen_er(spec.n, spec.q, rng)
    if isinstance(spec, WaxmanSpec):
        return gen_waxman(spec.n, spec.s, resolve_er_q(spec), rng)
    if isinstance(spec, BASpec):
        return gen_ba(spec.n, spec.m, rng)
    if isinstance(spec, PriceSpec):
        return gen_price(spec.n, spec.c, spec.directed, rng)
    raise ValidationError(f"未知的生成器规格: {spec!r}")


def describe_spec(spec: GeneratorSpec) -> dict:
    """生成器规格的可序列化描述"""
    if isinstance(spec, ERSpec):
        return {"model": "er", "n": spec.n, "q": spec.q}
    if isinstance(spec, WaxmanSpec):
        return {"model": "waxman", "n": spec.n, "s": spec.s, "z": spec.target_z}
    if isinstance(spec, BASpec):
        return {"model": "ba", "n": spec.n, "m": spec.m}
    if isinstance(spec, PriceSpec):
        return {"model": "price", "n": spec.n, "c": spec.c, "directed": spec.directed}
    raise ValidationError(f"未知的生成器规格: {spec!r}")
