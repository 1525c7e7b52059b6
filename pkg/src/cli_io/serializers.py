#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
结果文件读写：sizes.csv、summary.json、sweep.csv、betweenness.csv、manifest.json

CSV 列顺序固定、换行统一为 \\n；summary.json 不含时间戳，固定种子下逐字节可复现。
"""

import hashlib
import json
import logging
import os
from datetime import datetime
from typing import List, Optional, Sequence

import pandas as pd

from src import __version__
from src.errors import ValidationError
from src.experiments.betweenness_experiment import BetweennessPoint
from src.experiments.experiment_runner import ExperimentSummary
from src.experiments.sweep import SweepPoint
from src.graph_core.graph import CONVENTIONS

logger = logging.getLogger(__name__)

SIZES_COLUMNS = ["realization", "shock", "seed_node", "size", "steps", "is_global"]
SWEEP_COLUMNS = ["param_value", "frequency_mean", "ci_lo", "ci_hi", "mean_size_all", "mean_size_global",
                 "zero_fraction"]
BETWEENNESS_COLUMNS = ["s", "mean_degree", "ci_lo", "ci_hi", "used", "empty", "missing"]

MANIFEST_NAME = "manifest.json"

RUN_CONVENTIONS = dict(CONVENTIONS, vulnerability_rule="strict: active neighbors > phi * z")


def _write_csv(df: pd.DataFrame, path: str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    df.to_csv(path, index=False, lineterminator="\n", encoding='utf-8')


def _write_json(data, path: str, sort_keys: bool = True) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        json.dump(data, f, ensure_ascii=False, indent=2, sort_keys=sort_keys)
        f.write("\n")


def sizes_frame(summary: ExperimentSummary) -> pd.DataFrame:
    rows = []
    for record in summary.per_realization:
        for shock, (seed, size, steps, flag) in enumerate(
                zip(record.seed_nodes, record.cascade_sizes, record.steps, record.is_global)):
            rows.append((record.index, shock, seed, size, steps, int(flag)))
    return pd.DataFrame(rows, columns=SIZES_COLUMNS)


def write_sizes_csv(summary: ExperimentSummary, path: str) -> None:
    _write_csv(sizes_frame(summary), path)


def write_summary_json(summary: ExperimentSummary, config_echo: dict, path: str) -> None:
    data = summary.to_dict()
    data["config"] = config_echo
    data["manifest"] = MANIFEST_NAME
    _write_json(data, path)


def sweep_frame(points: Sequence[SweepPoint]) -> pd.DataFrame:
    rows = []
    for point in points:
        s = point.summary
        rows.append((point.value, s.frequency_mean, s.frequency_ci95[0], s.frequency_ci95[1],
                     s.mean_size_all, s.mean_size_global, s.zero_fraction))
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def write_sweep_csv(points: Sequence[SweepPoint], path: str) -> None:
    _write_csv(sweep_frame(points), path)


def write_betweenness_csv(points: Sequence[BetweennessPoint], path: str) -> None:
    rows = [(p.s, p.mean_degree, p.ci_lo, p.ci_hi, p.used, p.empty, int(p.missing)) for p in points]
    _write_csv(pd.DataFrame(rows, columns=BETWEENNESS_COLUMNS), path)


def _read_csv(path: str, columns: List[str]) -> pd.DataFrame:
    try:
        df = pd.read_csv(path)
    except FileNotFoundError:
        raise ValidationError(f"结果文件不存在: {os.path.abspath(path)}")
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise ValidationError(f"结果文件 {path} 无法解析: {e}")
    missing = [c for c in columns if c not in df.columns]
    if missing:
        raise ValidationError(f"结果文件 {path} 缺少列: {missing}")
    return df


def read_sizes_csv(path: str) -> pd.DataFrame:
    df = _read_csv(path, SIZES_COLUMNS)
    if df.empty or (df["size"] < 1).any():
        raise ValidationError(f"{path} 中的级联规模为空或不合法")
    return df


def read_sweep_csv(path: str) -> pd.DataFrame:
    return _read_csv(path, SWEEP_COLUMNS[:6])


def read_betweenness_csv(path: str) -> pd.DataFrame:
    return _read_csv(path, BETWEENNESS_COLUMNS)


def read_summary_n(sizes_path: str) -> Optional[int]:
    """读取与 sizes.csv 同目录的 summary.json 中的 n"""
    summary_path = os.path.join(os.path.dirname(os.path.abspath(sizes_path)), "summary.json")
    if not os.path.exists(summary_path):
        return None
    try:
        with open(summary_path, 'r', encoding='utf-8') as f:
            return int(json.load(f)["n"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError):
        logger.warning(f"⚠️ 无法从 {summary_path} 读取 n")
        return None


def file_sha256(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, 'rb') as f:
        for block in iter(lambda: f.read(1 << 16), b''):
            digest.update(block)
    return digest.hexdigest()


def write_manifest(out_dir: str, command: str, config_echo: dict, master_seed: Optional[int],
                   started: datetime, outputs: Sequence[str]) -> str:
    """
    写出运行清单：完整配置、版本、起止时间、约定、以及每个输出文件的 SHA-256

    Args:
        outputs: 相对于 out_dir 的输出文件名
    """
    manifest = {
        "command": command,
        "config_echo": config_echo,
        "tool_version": __version__,
        "started": started.isoformat(timespec='seconds'),
        "finished": datetime.now().isoformat(timespec='seconds'),
        "master_seed": master_seed,
        "conventions": RUN_CONVENTIONS,
        "outputs": {name: file_sha256(os.path.join(out_dir, name)) for name in outputs},
    }
    path = os.path.join(out_dir, MANIFEST_NAME)
    _write_json(manifest, path)
    logger.info(f"📄 运行清单已保存: {path}")
    return path


