#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
单位正方形取线问题：两个均匀随机点之间距离的密度 g(t)，及其拉普拉斯变换 G(s)
G(s) 用于标定 Waxman 图的 q，使期望平均度等于目标 z。
"""

import logging
import math
from functools import lru_cache

from scipy import integrate

from src.errors import InfeasibleParameterError, ValidationError

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)
QUAD_EPSABS = 1e-9


def line_picking_pdf(t: float) -> float:
    """距离密度 g(t)，t ∈ [0, √2]"""
    if not (0.0 <= t <= SQRT2):
        raise ValidationError(f"距离 t 必须在 [0, √2] 内: {t}")
    if t <= 1.0:
        return 2.0 * t * (t * t - 4.0 * t + math.pi)
    root = math.sqrt(t * t - 1.0)
    value = 2.0 * t * (4.0 * root - (t * t + 2.0 - math.pi) - 4.0 * math.atan(root))
    # t = √2 处解析值为 0，浮点误差可能给出极小的负数
    return max(value, 0.0)


def _integrate(func) -> float:
    # 密度在 t = 1 处不光滑，分两段积分
    inner, _ = integrate.quad(func, 0.0, 1.0, epsabs=QUAD_EPSABS, limit=200)
    outer, _ = integrate.quad(func, 1.0, SQRT2, epsabs=QUAD_EPSABS, limit=200)
    return inner + outer


@lru_cache(maxsize=256)
def laplace_G(s: float) -> float:
    """G(s) = E[exp(-s·D)]，D 为单位正方形内两随机点的距离"""
    if s < 0:
        raise ValidationError(f"衰减参数 s 必须非负: {s}")
    if s == 0:
        return _integrate(line_picking_pdf)
    return _integrate(lambda t: line_picking_pdf(t) * math.exp(-s * t))


def waxman_q(n: int, target_z: float, s: float) -> float:
    """
    标定 Waxman 的 q = z / ((n-1)·G(s))

    Raises:
        InfeasibleParameterError: q > 1，即目标平均度超过 (n-1)·G(s)
    """
    if n < 2:
        raise ValidationError(f"标定需要 n ≥ 2: n={n}")
    if target_z <= 0:
        raise ValidationError(f"目标平均度必须为正: z={target_z}")
    g_value = laplace_G(float(s))
    q = target_z / ((n - 1) * g_value)
    if q > 1.0:
        max_z = (n - 1) * g_value
        raise InfeasibleParameterError(
            f"n={n}, s={s} 时无法达到平均度 {target_z}（q={q:.4g} > 1），最大可达 z={max_z:.6g}",
            max_achievable=max_z,
        )
    return q
