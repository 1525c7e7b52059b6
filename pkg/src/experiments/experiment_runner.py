#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
蒙特卡洛实验：R 个网络实现 × 每个实现 k 次初始冲击

每个实现使用 RngStream(master_seed, 实现编号)，图生成、阈值、第 j 次冲击各有独立子流，
因此结果与并行调度无关；汇总按实现编号合并。
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed

from src.cascade.cascade_engine import activation_requirements, run_cascade
from src.cascade.seed_selection import SeedStrategy, TopDegreeFraction, UniformRandom, select_seeds, top_degree_nodes
from src.cascade.thresholds import (
    DeltaThreshold,
    ThresholdAssignment,
    ThresholdDistribution,
    assign_thresholds,
    vulnerable_fraction,
)
from src.errors import ValidationError
from src.experiments.statistics import (
    EmpiricalMax,
    FractionOfNetwork,
    GlobalCascadeRule,
    ccdf,
    classify_global,
    frequency_ci,
    intermediate_fraction,
)
from src.generators.random_graphs import GeneratorSpec, describe_spec, generate
from src.generators.rng_streams import PURPOSE_SHOCK, PURPOSE_THRESHOLDS, RngStream
from src.graph_core.analysis import average_clustering, degree_sequence, giant_component_nodes, mean_degree
from src.graph_core.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExperimentConfig:
    generator: GeneratorSpec
    realizations: int = 10
    shocks_per_realization: int = 1000
    threshold_distribution: ThresholdDistribution = field(default_factory=DeltaThreshold)
    seed_strategy: SeedStrategy = field(default_factory=UniformRandom)
    rule: GlobalCascadeRule = field(default_factory=FractionOfNetwork)
    master_seed: int = 0
    measure_structure: bool = True

    def __post_init__(self):
        if self.realizations < 1:
            raise ValidationError(f"实现数必须 ≥ 1: {self.realizations}")
        if self.shocks_per_realization < 1:
            raise ValidationError(f"每个实现的冲击数必须 ≥ 1: {self.shocks_per_realization}")

    def describe(self) -> dict:
        return {
            "generator": describe_spec(self.generator),
            "realizations": self.realizations,
            "shocks_per_realization": self.shocks_per_realization,
            "threshold_distribution": self.threshold_distribution.describe(),
            "seed_strategy": self.seed_strategy.describe(),
            "rule": self.rule.describe(),
            "master_seed": self.master_seed,
            "measure_structure": self.measure_structure,
        }


@dataclass
class RealizationRecord:
    """单个网络实现上 k 次冲击的结果"""
    index: int
    n: int
    cascade_sizes: List[int]
    seed_nodes: List[int]
    steps: List[int]
    is_global: List[bool]
    giant_size: int
    global_count: int
    zero_count: int
    seeds_in_giant: int
    mean_degree: Optional[float] = None
    average_clustering: Optional[float] = None
    vulnerable_fraction: Optional[float] = None

    @property
    def frequency(self) -> float:
        return self.global_count / len(self.cascade_sizes)

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "giant_size": self.giant_size,
            "global_count": self.global_count,
            "zero_count": self.zero_count,
            "seeds_in_giant": self.seeds_in_giant,
            "frequency": self.frequency,
            "mean_degree": self.mean_degree,
            "average_clustering": self.average_clustering,
            "vulnerable_fraction": self.vulnerable_fraction,
        }


@dataclass
class ExperimentSummary:
    n: int
    per_realization: List[RealizationRecord]
    pooled_sizes: List[int]
    frequency_mean: float
    frequency_ci95: Tuple[float, float]
    ci_degenerate: bool
    ccdf_points: List[Tuple[float, float]]
    mean_size_all: float
    mean_size_global: Optional[float]
    zero_fraction: float
    intermediate_fraction: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "realizations": [r.to_dict() for r in self.per_realization],
            "frequency_mean": self.frequency_mean,
            "frequency_ci95": list(self.frequency_ci95),
            "ci_degenerate": self.ci_degenerate,
            "mean_size_all": self.mean_size_all,
            "mean_size_global": self.mean_size_global,
            "zero_fraction": self.zero_fraction,
            "intermediate_fraction": self.intermediate_fraction,
            "ccdf_points": [list(p) for p in self.ccdf_points],
        }


def run_batch(g: Graph, thresholds: ThresholdAssignment, k: int, seed_strategy: SeedStrategy,
              rule: GlobalCascadeRule, stream: RngStream, index: int = 0,
              giant_mask: Optional[np.ndarray] = None) -> RealizationRecord:
    """
    在同一个图和阈值上运行 k 次独立冲击

    第 j 次冲击的种子由 stream 的 (PURPOSE_SHOCK, j) 子流选择。
    零级联定义为 final_size == 1（没有扩散出初始冲击）。
    """
    if k < 1:
        raise ValidationError(f"冲击次数必须 ≥ 1: {k}")
    if giant_mask is None:
        giant_mask = giant_component_nodes(g)
    giant_size = int(giant_mask.sum())
    need = activation_requirements(g, thresholds)
    candidates = top_degree_nodes(g, seed_strategy.p) if isinstance(seed_strategy, TopDegreeFraction) else None

    sizes, seed_nodes, steps = [], [], []
    seeds_in_giant = 0
    for j in range(k):
        seeds = select_seeds(seed_strategy, g, stream.generator(PURPOSE_SHOCK, j), candidates=candidates)
        outcome = run_cascade(g, thresholds, seeds, requirements=need)
        sizes.append(outcome.final_size)
        seed_nodes.append(outcome.seed_set[0])
        steps.append(outcome.steps)
        if giant_mask[outcome.seed_set[0]]:
            seeds_in_giant += 1

    batch_max = max(sizes) if isinstance(rule, EmpiricalMax) else None
    is_global = [classify_global(size, g.n, giant_size, rule, batch_max) for size in sizes]

    return RealizationRecord(
        index=index,
        n=g.n,
        cascade_sizes=sizes,
        seed_nodes=seed_nodes,
        steps=steps,
        is_global=is_global,
        giant_size=giant_size,
        global_count=sum(is_global),
        zero_count=sum(1 for size in sizes if size == 1),
        seeds_in_giant=seeds_in_giant,
    )


def run_realization(config: ExperimentConfig, index: int) -> RealizationRecord:
    """生成第 index 个实现并运行一批冲击"""
    stream = RngStream(config.master_seed, index)
    g = generate(config.generator, stream)
    thresholds = assign_thresholds(g.n, config.threshold_distribution, stream.generator(PURPOSE_THRESHOLDS))
    record = run_batch(g, thresholds, config.shocks_per_realization, config.seed_strategy,
                       config.rule, stream, index=index)
    if config.measure_structure:
        record.mean_degree = mean_degree(g)
        record.average_clustering = average_clustering(g)
        record.vulnerable_fraction = vulnerable_fraction(degree_sequence(g), thresholds)
    logger.info(f"📊 实现 {index + 1}/{config.realizations}: 全局级联 {record.global_count}/{len(record.cascade_sizes)}，"
                f"零级联 {record.zero_count}，最大连通分量 {record.giant_size}")
    return record


def summarize(records: List[RealizationRecord]) -> ExperimentSummary:
    """按实现编号汇总"""
    records = sorted(records, key=lambda r: r.index)
    n = records[0].n
    freqs = [r.frequency for r in records]
    interval = frequency_ci(freqs)
    pooled = [size for r in records for size in r.cascade_sizes]
    global_sizes = [size for r in records for size, flag in zip(r.cascade_sizes, r.is_global) if flag]
    return ExperimentSummary(
        n=n,
        per_realization=records,
        pooled_sizes=pooled,
        frequency_mean=interval.mean,
        frequency_ci95=(interval.lo, interval.hi),
        ci_degenerate=interval.degenerate,
        ccdf_points=ccdf(pooled, n),
        mean_size_all=float(np.mean(pooled)),
        mean_size_global=float(np.mean(global_sizes)) if global_sizes else None,
        zero_fraction=sum(r.zero_count for r in records) / len(pooled),
        intermediate_fraction=intermediate_fraction(pooled, n),
    )


def run_experiment(config: ExperimentConfig, n_jobs: int = 1) -> ExperimentSummary:
    """
    运行完整实验

    Args:
        config: 实验配置
        n_jobs: 按实现并行的 worker 数；结果与之无关
    """
    logger.info(f"🚀 开始实验: {describe_spec(config.generator)}，{config.realizations} 个实现 × "
                f"{config.shocks_per_realization} 次冲击")
    indices = range(config.realizations)
    if n_jobs == 1 or config.realizations == 1:
        records = [run_realization(config, i) for i in indices]
    else:
        records = Parallel(n_jobs=n_jobs)(delayed(run_realization)(config, i) for i in indices)
    summary = summarize(records)
    logger.info(f"✅ 实验完成: 全局级联频率 {summary.frequency_mean:.2%} "
                f"(95% CI {summary.frequency_ci95[0]:.2%} – {summary.frequency_ci95[1]:.2%})")
    return summary
