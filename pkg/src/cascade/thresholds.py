#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
阈值分配 φ_i ∈ (0,1]，以及稳定度 κ 与脆弱性判定
"""

import logging
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from src.errors import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeltaThreshold:
    """f(φ) = δ(φ − φ*)"""
    phi_star: float = 0.18

    def __post_init__(self):
        if not (0.0 < self.phi_star <= 1.0):
            raise ValidationError(f"φ* 必须在 (0,1] 内: {self.phi_star}")

    def describe(self) -> dict:
        return {"kind": "delta", "phi_star": self.phi_star}


@dataclass(frozen=True)
class UniformThreshold:
    """φ_i 独立均匀分布于 [lo, hi]"""
    lo: float
    hi: float

    def __post_init__(self):
        if not (0.0 < self.lo <= self.hi <= 1.0):
            raise ValidationError(f"均匀阈值需满足 0 < lo ≤ hi ≤ 1: lo={self.lo}, hi={self.hi}")

    def describe(self) -> dict:
        return {"kind": "uniform", "lo": self.lo, "hi": self.hi}


ThresholdDistribution = Union[DeltaThreshold, UniformThreshold]


@dataclass(frozen=True)
class ThresholdAssignment:
    phi: np.ndarray
    distribution_tag: dict

    def __len__(self) -> int:
        return len(self.phi)


def assign_thresholds(n: int, distribution: ThresholdDistribution,
                      rng: np.random.Generator) -> ThresholdAssignment:
    """按分布为 n 个节点分配阈值"""
    if isinstance(distribution, DeltaThreshold):
        phi = np.full(n, distribution.phi_star, dtype=float)
    elif isinstance(distribution, UniformThreshold):
        phi = rng.uniform(distribution.lo, distribution.hi, size=n)
        # uniform 取半开区间 [lo, hi)，lo > 0 保证 φ > 0
    else:
        raise ValidationError(f"未知的阈值分布: {distribution!r}")
    phi.flags.writeable = False
    return ThresholdAssignment(phi, distribution.describe())


def stability_kappa(phi: float, z: int) -> int:
    """κ = ⌈φ·z⌉，激活所需的活跃邻居数"""
    return int(math.ceil(phi * z))


def is_vulnerable(phi: float, z: int) -> bool:
    """单个活跃邻居即可激活：1 > φ·z（严格不等式），孤立节点不脆弱"""
    return z > 0 and 1 > phi * z


def vulnerable_fraction(degrees: np.ndarray, thresholds: ThresholdAssignment) -> float:
    """脆弱节点比例（有向图按出度，即所关注的节点数）"""
    if len(degrees) == 0:
        return 0.0
    z = np.asarray(degrees)
    mask = (z > 0) & (thresholds.phi * z < 1)
    return float(mask.mean())
