#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
实验配置加载：扁平 JSON 对象 -> ExperimentConfig
"""

import json
import logging
import os
from typing import Any, Dict, Optional

from src.cascade.seed_selection import Explicit, TopDegreeFraction, UniformRandom
from src.cascade.thresholds import DeltaThreshold, UniformThreshold
from src.errors import SchemaError, ValidationError
from src.experiments.experiment_runner import ExperimentConfig
from src.experiments.statistics import EmpiricalMax, FractionOfGiant, FractionOfNetwork
from src.generators.random_graphs import BASpec, ERSpec, GeneratorSpec, PriceSpec, WaxmanSpec

logger = logging.getLogger(__name__)

ENV_OUTPUT_DIR = "CASCADE_LAB_OUTPUT_DIR"
ENV_THREADS = "CASCADE_LAB_THREADS"
DEFAULT_OUTPUT_DIR = "results"

ALLOWED_KEYS = {
    "model", "n", "s", "z", "q", "m", "c", "directed",
    "threshold", "phi_star", "phi_lo", "phi_hi",
    "k", "realizations", "rule", "b", "gamma",
    "seed_strategy", "top_fraction", "seed_nodes",
    "master_seed", "measure_structure",
}
MODELS = ("er", "waxman", "ba", "price")


def load_config_file(path: str) -> Dict[str, Any]:
    """读取配置 JSON"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except FileNotFoundError:
        raise ValidationError(f"配置文件不存在: {os.path.abspath(path)}")
    except json.JSONDecodeError as e:
        raise ValidationError(f"配置文件 {path} 格式错误，请检查JSON语法: {e}")
    if not isinstance(data, dict):
        raise ValidationError(f"配置文件 {path} 必须是一个 JSON 对象")
    return data


def _int(cfg: Dict[str, Any], key: str, minimum: Optional[int] = None, default: Any = None) -> int:
    if key not in cfg:
        if default is None:
            raise SchemaError(key, "缺少必填字段")
        return default
    value = cfg[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(key, f"必须是整数，实际为 {value!r}")
    if minimum is not None and value < minimum:
        raise SchemaError(key, f"必须 ≥ {minimum}，实际为 {value}")
    return value


def _float(cfg: Dict[str, Any], key: str, default: Any = None) -> float:
    if key not in cfg:
        if default is None:
            raise SchemaError(key, "缺少必填字段")
        return default
    value = cfg[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(key, f"必须是数值，实际为 {value!r}")
    return float(value)


def _bool(cfg: Dict[str, Any], key: str, default: bool) -> bool:
    value = cfg.get(key, default)
    if not isinstance(value, bool):
        raise SchemaError(key, f"必须是 true/false，实际为 {value!r}")
    return value


def _choice(cfg: Dict[str, Any], key: str, choices, default: Any = None) -> str:
    value = cfg.get(key, default)
    if value is None:
        raise SchemaError(key, "缺少必填字段")
    if value not in choices:
        raise SchemaError(key, f"取值 {value!r} 不在 {list(choices)} 中")
    return value


def _wrap(key: str, factory):
    """把构造阶段的 ValidationError 转成带字段名的 SchemaError"""
    try:
        return factory()
    except SchemaError:
        raise
    except ValidationError as e:
        raise SchemaError(key, str(e))


def build_generator_spec(cfg: Dict[str, Any]) -> GeneratorSpec:
    model = _choice(cfg, "model", MODELS)
    n = _int(cfg, "n", minimum=1)
    if model == "er":
        if "q" in cfg:
            q = _float(cfg, "q")
        elif "z" in cfg:
            q = _float(cfg, "z") / max(n - 1, 1)
        else:
            raise SchemaError("q", "ER 模型需要 q 或 z")
        return _wrap("q", lambda: ERSpec(n=n, q=q))
    if model == "waxman":
        s = _float(cfg, "s")
        z = _float(cfg, "z")
        return _wrap("s" if s < 0 else "z", lambda: WaxmanSpec(n=n, s=s, target_z=z))
    if model == "ba":
        m = _int(cfg, "m", minimum=1)
        return _wrap("m", lambda: BASpec(n=n, m=m))
    c = _float(cfg, "c")
    directed = _bool(cfg, "directed", False)
    return _wrap("c", lambda: PriceSpec(n=n, c=c, directed=directed))


def build_experiment_config(cfg: Dict[str, Any]) -> ExperimentConfig:
    """校验扁平配置并构造 ExperimentConfig；错误信息包含字段名"""
    unknown = sorted(set(cfg) - ALLOWED_KEYS)
    if unknown:
        raise SchemaError(unknown[0], "未知字段")

    generator = build_generator_spec(cfg)

    threshold_kind = _choice(cfg, "threshold", ("delta", "uniform"), default="delta")
    if threshold_kind == "delta":
        phi_star = _float(cfg, "phi_star", default=0.18)
        distribution = _wrap("phi_star", lambda: DeltaThreshold(phi_star))
    else:
        lo, hi = _float(cfg, "phi_lo"), _float(cfg, "phi_hi")
        distribution = _wrap("phi_lo", lambda: UniformThreshold(lo, hi))

    rule_kind = _choice(cfg, "rule", ("fraction_of_network", "fraction_of_giant", "empirical_max"),
                        default="fraction_of_network")
    if rule_kind == "fraction_of_network":
        b = _float(cfg, "b", default=0.1)
        rule = _wrap("b", lambda: FractionOfNetwork(b))
    elif rule_kind == "fraction_of_giant":
        gamma = _float(cfg, "gamma", default=1.0)
        rule = _wrap("gamma", lambda: FractionOfGiant(gamma))
    else:
        rule = EmpiricalMax()

    strategy_kind = _choice(cfg, "seed_strategy", ("uniform_random", "top_degree", "explicit"),
                            default="uniform_random")
    if strategy_kind == "uniform_random":
        strategy = UniformRandom()
    elif strategy_kind == "top_degree":
        p = _float(cfg, "top_fraction", default=0.01)
        strategy = _wrap("top_fraction", lambda: TopDegreeFraction(p))
    else:
        nodes = cfg.get("seed_nodes")
        if not isinstance(nodes, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in nodes):
            raise SchemaError("seed_nodes", "必须是整数列表")
        if any(v >= generator.n for v in nodes):
            raise SchemaError("seed_nodes", f"节点编号必须小于 n={generator.n}")
        strategy = _wrap("seed_nodes", lambda: Explicit(tuple(nodes)))

    return ExperimentConfig(
        generator=generator,
        realizations=_int(cfg, "realizations", minimum=1, default=10),
        shocks_per_realization=_int(cfg, "k", minimum=1, default=1000),
        threshold_distribution=distribution,
        seed_strategy=strategy,
        rule=rule,
        master_seed=_int(cfg, "master_seed", minimum=0, default=0),
        measure_structure=_bool(cfg, "measure_structure", True),
    )


def load_experiment_config(path: str) -> ExperimentConfig:
    return build_experiment_config(load_config_file(path))


def resolve_output_dir(cli_value: Optional[str]) -> str:
    """输出目录：命令行 > 环境变量 > 默认值"""
    return cli_value or os.environ.get(ENV_OUTPUT_DIR) or DEFAULT_OUTPUT_DIR


def resolve_threads(cli_value: Optional[int]) -> int:
    """并行数：命令行 > 环境变量 > 1"""
    if cli_value is not None:
        value = cli_value
    else:
        raw = os.environ.get(ENV_THREADS, "1")
        try:
            value = int(raw)
        except ValueError:
            raise ValidationError(f"环境变量 {ENV_THREADS} 必须是整数: {raw!r}")
    if value < 1:
        raise ValidationError(f"并行数必须 ≥ 1: {value}")
    return value
