#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
初始冲击（种子）选择策略
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np

from src.errors import ValidationError
from src.graph_core.analysis import degree_sequence
from src.graph_core.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UniformRandom:
    """均匀随机选一个节点"""

    def describe(self) -> dict:
        return {"kind": "uniform_random"}


@dataclass(frozen=True)
class TopDegreeFraction:
    """从度最高的 ⌈p·n⌉ 个节点中均匀选一个"""
    p: float = 0.01

    def __post_init__(self):
        if not (0.0 < self.p <= 1.0):
            raise ValidationError(f"高度节点比例 p 必须在 (0,1] 内: {self.p}")

    def describe(self) -> dict:
        return {"kind": "top_degree", "p": self.p}


@dataclass(frozen=True)
class Explicit:
    """固定的种子列表"""
    nodes: Tuple[int, ...]

    def __post_init__(self):
        if not self.nodes:
            raise ValidationError("显式种子列表不能为空")
        if any(int(v) < 0 for v in self.nodes):
            raise ValidationError(f"显式种子包含负数编号: {self.nodes}")

    def describe(self) -> dict:
        return {"kind": "explicit", "nodes": [int(v) for v in self.nodes]}


SeedStrategy = Union[UniformRandom, TopDegreeFraction, Explicit]


def top_degree_nodes(g: Graph, p: float) -> np.ndarray:
    """按度降序、同度按编号升序排列后的前 ⌈p·n⌉ 个节点"""
    count = max(1, math.ceil(p * g.n))
    degrees = degree_sequence(g)
    order = np.lexsort((np.arange(g.n), -degrees))
    return order[:count]


def select_seeds(strategy: SeedStrategy, g: Graph, rng: np.random.Generator,
                 candidates: np.ndarray = None) -> List[int]:
    """
    按策略选择种子

    Args:
        candidates: TopDegreeFraction 的候选集，批量运行时预先计算并复用
    """
    if g.n == 0:
        raise ValidationError("空图无法选择种子")
    if isinstance(strategy, UniformRandom):
        return [int(rng.integers(g.n))]
    if isinstance(strategy, TopDegreeFraction):
        pool = candidates if candidates is not None else top_degree_nodes(g, strategy.p)
        return [int(pool[int(rng.integers(len(pool)))])]
    if isinstance(strategy, Explicit):
        nodes = [int(v) for v in strategy.nodes]
        out_of_range = [v for v in nodes if v >= g.n]
        if out_of_range:
            raise ValidationError(f"显式种子超出范围 [0, {g.n}): {out_of_range}")
        return nodes
    raise ValidationError(f"未知的种子策略: {strategy!r}")
