#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
高介数节点的平均度随 Waxman 局部性 s 的变化
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from joblib import Parallel, delayed

from src.errors import ValidationError
from src.experiments.statistics import mean_ci
from src.generators.random_graphs import WaxmanSpec, generate
from src.generators.rng_streams import RngStream, derive_seed
from src.graph_core.analysis import high_betweenness_mean_degree

logger = logging.getLogger(__name__)


@dataclass
class BetweennessPoint:
    s: float
    mean_degree: Optional[float]
    ci_lo: Optional[float]
    ci_hi: Optional[float]
    used: int
    empty: int
    ci_degenerate: bool = False

    @property
    def missing(self) -> bool:
        return self.used == 0


def _realization_value(spec: WaxmanSpec, seed: int, index: int, tau: float) -> Optional[float]:
    g = generate(spec, RngStream(seed, index))
    return high_betweenness_mean_degree(g, tau)


def betweenness_degree_experiment(s_values: Sequence[float], n: int, z: float, realizations: int,
                                  tau: float = 0.03, master_seed: int = 0,
                                  n_jobs: int = 1) -> List[BetweennessPoint]:
    """
    对每个 s 生成若干 Waxman 实现，计算介数 > tau 的节点的平均度及 95% 置信区间
    没有合格节点的实现不计入均值，单独计数；全部为空时该点标记为缺失。
    """
    if realizations < 1:
        raise ValidationError(f"实现数必须 ≥ 1: {realizations}")
    if len(s_values) == 0:
        raise ValidationError("s 值列表不能为空")

    points = []
    for s in s_values:
        spec = WaxmanSpec(n=n, s=float(s), target_z=z)
        seed = derive_seed(master_seed, "s", float(s))
        if n_jobs == 1:
            values = [_realization_value(spec, seed, i, tau) for i in range(realizations)]
        else:
            values = Parallel(n_jobs=n_jobs)(delayed(_realization_value)(spec, seed, i, tau)
                                             for i in range(realizations))
        used = [v for v in values if v is not None]
        empty = len(values) - len(used)
        if not used:
            logger.warning(f"⚠️ s={s}: 所有实现都没有介数 > {tau} 的节点，该点缺失")
            points.append(BetweennessPoint(float(s), None, None, None, 0, empty, ci_degenerate=True))
            continue
        interval = mean_ci(used)
        points.append(BetweennessPoint(float(s), interval.mean, interval.lo, interval.hi,
                                       len(used), empty, ci_degenerate=interval.degenerate))
        logger.info(f"📊 s={s}: 高介数节点平均度 {interval.mean:.3f}（{len(used)} 个实现，{empty} 个无合格节点）")
    return points
