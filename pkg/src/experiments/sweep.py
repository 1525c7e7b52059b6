#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
参数扫描：s（Waxman 局部性）、z（平均度）、c（Price 平均初始连接数）
"""

import dataclasses
import logging
from dataclasses import dataclass
from typing import List, Sequence

from src.errors import ValidationError
from src.experiments.experiment_runner import ExperimentConfig, ExperimentSummary, run_experiment
from src.generators.random_graphs import BASpec, ERSpec, GeneratorSpec, PriceSpec, WaxmanSpec
from src.generators.rng_streams import derive_seed

logger = logging.getLogger(__name__)

SWEEP_PARAMETERS = ("s", "z", "c")


@dataclass
class SweepPoint:
    value: float
    config: ExperimentConfig
    summary: ExperimentSummary


def with_parameter(spec: GeneratorSpec, parameter: str, value: float) -> GeneratorSpec:
    """返回替换了扫描参数的新生成器规格；参数不适用于该模型时报错"""
    if parameter not in SWEEP_PARAMETERS:
        raise ValidationError(f"未知的扫描参数: {parameter}（可选 {', '.join(SWEEP_PARAMETERS)}）")

    if parameter == "s":
        if not isinstance(spec, WaxmanSpec):
            raise ValidationError(f"s 扫描只适用于 Waxman 模型，当前为 {type(spec).__name__}")
        return dataclasses.replace(spec, s=float(value))

    if parameter == "c":
        if not isinstance(spec, PriceSpec):
            raise ValidationError(f"c 扫描只适用于 Price 模型，当前为 {type(spec).__name__}")
        return dataclasses.replace(spec, c=float(value))

    # z 扫描
    if isinstance(spec, WaxmanSpec):
        return dataclasses.replace(spec, target_z=float(value))
    if isinstance(spec, ERSpec):
        if spec.n < 2:
            raise ValidationError("ER 的 z 扫描需要 n ≥ 2")
        return dataclasses.replace(spec, q=float(value) / (spec.n - 1))
    if isinstance(spec, BASpec):
        if float(value) != int(value) or int(value) % 2 != 0 or int(value) < 2:
            raise ValidationError(f"BA 网络的平均度 z = 2m 只能取正偶数: z={value}")
        return dataclasses.replace(spec, m=int(value) // 2)
    if isinstance(spec, PriceSpec):
        # 名义值 c = z/2
        return dataclasses.replace(spec, c=float(value) / 2)
    raise ValidationError(f"未知的生成器规格: {spec!r}")


def sweep(parameter: str, values: Sequence[float], base_config: ExperimentConfig,
          n_jobs: int = 1) -> List[SweepPoint]:
    """
    对每个参数值运行一次实验，其余配置不变

    每个值的主种子由 derive_seed(master_seed, parameter, float(value)) 派生，与执行顺序无关。
    """
    if len(values) == 0:
        raise ValidationError("扫描值列表不能为空")
    # 先全部校验，避免跑了一半才发现参数不合法
    configs = []
    for value in values:
        spec = with_parameter(base_config.generator, parameter, value)
        seed = derive_seed(base_config.master_seed, parameter, float(value))
        configs.append(dataclasses.replace(base_config, generator=spec, master_seed=seed))

    points = []
    for value, config in zip(values, configs):
        logger.info(f"🔁 扫描 {parameter}={value}")
        points.append(SweepPoint(value=value, config=config, summary=run_experiment(config, n_jobs=n_jobs)))
    return points
