#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
全局级联判定、CCDF 与置信区间
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from src.errors import ValidationError

logger = logging.getLogger(__name__)

Z_95 = 1.96


@dataclass(frozen=True)
class FractionOfNetwork:
    """规模 > b·n 为全局级联"""
    b: float = 0.1

    def __post_init__(self):
        if not (0.0 < self.b <= 1.0):
            raise ValidationError(f"b 必须在 (0,1] 内: {self.b}")

    def describe(self) -> dict:
        return {"kind": "fraction_of_network", "b": self.b}


@dataclass(frozen=True)
class FractionOfGiant:
    """规模 ≥ γ·最大连通分量 为全局级联"""
    gamma: float = 1.0

    def __post_init__(self):
        if not (0.0 < self.gamma <= 1.0):
            raise ValidationError(f"gamma 必须在 (0,1] 内: {self.gamma}")

    def describe(self) -> dict:
        return {"kind": "fraction_of_giant", "gamma": self.gamma}


@dataclass(frozen=True)
class EmpiricalMax:
    """规模等于本批次观测到的最大规模为全局级联"""

    def describe(self) -> dict:
        return {"kind": "empirical_max"}


GlobalCascadeRule = Union[FractionOfNetwork, FractionOfGiant, EmpiricalMax]


@dataclass(frozen=True)
class FrequencyInterval:
    mean: float
    lo: float
    hi: float
    degenerate: bool = False


def classify_global(size: int, n: int, giant: int, rule: GlobalCascadeRule,
                    batch_max: Optional[int] = None) -> bool:
    """按规则判断一次级联是否为全局级联"""
    if not (0 <= size <= n):
        raise ValidationError(f"级联规模 {size} 超出 [0, {n}]")
    if isinstance(rule, FractionOfNetwork):
        return size > rule.b * n
    if isinstance(rule, FractionOfGiant):
        return size >= rule.gamma * giant
    if isinstance(rule, EmpiricalMax):
        if batch_max is None:
            raise ValidationError("EmpiricalMax 规则需要 batch_max")
        return size == batch_max
    raise ValidationError(f"未知的全局级联规则: {rule!r}")


def ccdf(sizes: Sequence[int], n: int) -> List[Tuple[float, float]]:
    """经验互补累积分布：对每个观测到的规模 x·n，p = P(size ≥ x·n)"""
    if len(sizes) == 0:
        raise ValidationError("CCDF 输入不能为空")
    arr = np.sort(np.asarray(sizes, dtype=np.int64))
    if arr[0] < 1 or arr[-1] > n:
        raise ValidationError(f"级联规模必须在 [1, {n}] 内")
    values, first_index = np.unique(arr, return_index=True)
    total = arr.size
    return [(int(v) / n, (total - int(i)) / total) for v, i in zip(values, first_index)]


def mean_ci(values: Sequence[float], clamp: Optional[Tuple[float, float]] = None) -> FrequencyInterval:
    """均值 ± 1.96·s/√R 的正态近似区间；只有一个值时退化为点"""
    if len(values) == 0:
        raise ValidationError("置信区间需要至少一个值")
    arr = np.asarray(values, dtype=float)
    mean = float(arr.mean())
    if arr.size < 2:
        logger.warning("⚠️ 只有一个样本，置信区间退化")
        return FrequencyInterval(mean, mean, mean, degenerate=True)
    half = Z_95 * float(arr.std(ddof=1)) / math.sqrt(arr.size)
    lo, hi = mean - half, mean + half
    if clamp is not None:
        lo, hi = max(lo, clamp[0]), min(hi, clamp[1])
    return FrequencyInterval(mean, lo, hi)


def frequency_ci(per_realization_freqs: Sequence[float]) -> FrequencyInterval:
    """全局级联频率的 95% 置信区间，截断到 [0,1]"""
    return mean_ci(per_realization_freqs, clamp=(0.0, 1.0))


def intermediate_fraction(sizes: Sequence[int], n: int, lo: float = 0.01, hi: float = 0.1) -> float:
    """规模落在 (lo·n, hi·n) 的级联比例，双峰分布下应接近 0"""
    if len(sizes) == 0:
        return 0.0
    arr = np.asarray(sizes)
    return float(((arr > lo * n) & (arr < hi * n)).mean())
