#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Watts 阈值级联动态（同步更新）

规则：每一轮中，未激活节点 i 在 Σ_{j∈N(i)} s_j > φ_i·z_i 时激活（严格大于），
有向图中节点受其所关注（所引用）节点的影响，
即读取出邻居并按出度归一化，影响沿 旧→新 方向传播；激活后保持激活；某一轮没有新激活即终止。
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np

from src.cascade.thresholds import ThresholdAssignment
from src.errors import GuardError, ValidationError
from src.graph_core.graph import Graph

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_N = 20


@dataclass(frozen=True)
class CascadeOutcome:
    seed_set: Tuple[int, ...]
    final_size: int
    steps: int
    trajectory: Optional[Tuple[int, ...]] = None


def _normalize_seeds(g: Graph, thresholds: ThresholdAssignment, seeds: Iterable[int]) -> List[int]:
    if len(thresholds) != g.n:
        raise ValidationError(f"阈值长度 {len(thresholds)} 与节点数 {g.n} 不一致")
    unique = list(dict.fromkeys(int(s) for s in seeds))
    if not unique:
        raise ValidationError("种子集合不能为空")
    for s in unique:
        if not (0 <= s < g.n):
            raise ValidationError(f"种子节点 {s} 超出范围 [0, {g.n})")
    return unique


def activation_requirements(g: Graph, thresholds: ThresholdAssignment) -> List[float]:
    """每个节点的 φ_i·z_i（有向图 z 为出度）"""
    phi = thresholds.phi
    return [float(phi[i]) * len(nbrs) for i, nbrs in enumerate(g.adjacency)]


def _followers(g: Graph):
    """u 激活后需要重新评估的节点：有向图为引用 u 的节点（入邻居）"""
    return g.in_adjacency


def _propagate(adj, need: List[float], n: int, seed_list: List[int], record_trajectory: bool):
    """前沿传播：只重新评估受新激活节点影响的节点（动态单调，与全量扫描等价）"""
    active = bytearray(n)
    for s in seed_list:
        active[s] = 1
    hits = [0] * n
    size = len(seed_list)
    trajectory = [size] if record_trajectory else None

    frontier = seed_list
    steps = 0
    while frontier:
        touched = set()
        for u in frontier:
            for v in adj[u]:
                if not active[v]:
                    hits[v] += 1
                    touched.add(v)
        # 先收集本轮全部新激活，再统一更新状态（同步语义）
        newly = sorted(v for v in touched if hits[v] > need[v])
        if not newly:
            break
        for v in newly:
            active[v] = 1
        size += len(newly)
        steps += 1
        if trajectory is not None:
            trajectory.append(size)
        frontier = newly
    return active, size, steps, trajectory


def run_cascade(g: Graph, thresholds: ThresholdAssignment, seeds: Iterable[int],
                record_trajectory: bool = False,
                requirements: Optional[List[float]] = None) -> CascadeOutcome:
    """
    运行一次同步级联直至不动点

    Args:
        g: 图
        thresholds: 阈值分配
        seeds: 初始激活节点
        record_trajectory: 是否记录每轮的激活总数
        requirements: 预先计算的 φ_i·z_i，同一图上批量运行时复用

    Returns:
        CascadeOutcome
    """
    seed_list = _normalize_seeds(g, thresholds, seeds)
    need = requirements if requirements is not None else activation_requirements(g, thresholds)
    _, size, steps, trajectory = _propagate(_followers(g), need, g.n, seed_list, record_trajectory)
    return CascadeOutcome(
        seed_set=tuple(seed_list),
        final_size=size,
        steps=steps,
        trajectory=tuple(trajectory) if trajectory is not None else None,
    )


def final_active_set(g: Graph, thresholds: ThresholdAssignment, seeds: Iterable[int]) -> np.ndarray:
    """不动点处的激活掩码"""
    seed_list = _normalize_seeds(g, thresholds, seeds)
    active, _, _, _ = _propagate(_followers(g), activation_requirements(g, thresholds), g.n, seed_list, False)
    return np.frombuffer(bytes(active), dtype=np.uint8).astype(bool)


def brute_force_fixpoint(g: Graph, thresholds: ThresholdAssignment, seeds: Iterable[int]) -> CascadeOutcome:
    """测试用对照实现：每轮对所有节点从头计算状态，不做前沿优化（n ≤ 20）"""
    if g.n > BRUTE_FORCE_MAX_N:
        raise GuardError(f"暴力不动点仅用于 n ≤ {BRUTE_FORCE_MAX_N} 的小图: n={g.n}")
    seed_list = _normalize_seeds(g, thresholds, seeds)
    phi = thresholds.phi

    state = [0] * g.n
    for s in seed_list:
        state[s] = 1
    trajectory = [sum(state)]
    steps = 0
    while True:
        next_state = [
            1 if state[i] == 1 or sum(state[j] for j in g.neighbors(i)) > float(phi[i]) * len(g.neighbors(i)) else 0
            for i in range(g.n)
        ]
        if next_state == state:
            break
        state = next_state
        steps += 1
        trajectory.append(sum(state))

    return CascadeOutcome(tuple(seed_list), sum(state), steps, tuple(trajectory))


def unactivated_violations(g: Graph, thresholds: ThresholdAssignment, active: np.ndarray) -> List[int]:
    """全量扫描：返回仍满足激活条件的未激活节点（不动点处应为空）"""
    need = activation_requirements(g, thresholds)
    violations = []
    for i, nbrs in enumerate(g.adjacency):
        if not active[i] and sum(int(active[j]) for j in nbrs) > need[i]:
            violations.append(i)
    return violations
