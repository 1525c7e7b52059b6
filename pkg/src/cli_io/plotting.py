#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
结果绘图（SVG）：CCDF 用双对数坐标；扫描和介数实验用线性坐标加 95% 置信区间误差棒
固定样式、固定 hashsalt、不写日期元数据，相同输入得到相同 SVG。
"""

import logging
import os
from typing import List, Sequence, Tuple

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
import seaborn as sns

from src.experiments.statistics import ccdf

logger = logging.getLogger(__name__)

FIGSIZE = (6.4, 4.8)


def _setup_style() -> list:
    sns.set_theme(style="whitegrid", context="paper")
    plt.rcParams['svg.hashsalt'] = 'cascade-lab'
    plt.rcParams['svg.fonttype'] = 'path'
    return sns.color_palette("deep")


def _save(fig, path: str) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.savefig(path, format='svg', metadata={'Date': None})
    plt.close(fig)
    logger.info(f"🖼️ 图已保存: {path}")
    return path


def plot_ccdf(series: Sequence[Tuple[str, Sequence[int], int]], path: str) -> str:
    """
    叠加多组级联规模的 CCDF

    Args:
        series: (标签, 级联规模列表, n)
    """
    palette = _setup_style()
    fig, ax = plt.subplots(figsize=FIGSIZE)
    for idx, (label, sizes, n) in enumerate(series):
        points = ccdf(list(sizes), n)
        xs = [x for x, _ in points]
        ps = [p for _, p in points]
        ax.step(xs, ps, where='post', label=label, color=palette[idx % len(palette)])
    ax.set_xscale('log')
    ax.set_yscale('log')
    ax.set_xlabel("Cascade size (fraction of network)")
    ax.set_ylabel("P(size ≥ x)")
    ax.legend()
    return _save(fig, path)


def _errorbar_plot(series: Sequence[Tuple[str, pd.DataFrame]], x_col: str, y_col: str,
                   x_label: str, y_label: str, path: str) -> str:
    palette = _setup_style()
    fig, ax = plt.subplots(figsize=FIGSIZE)
    for idx, (label, df) in enumerate(series):
        df = df.dropna(subset=[y_col])
        y = df[y_col].to_numpy(dtype=float)
        lo = df["ci_lo"].to_numpy(dtype=float)
        hi = df["ci_hi"].to_numpy(dtype=float)
        yerr = np.vstack([np.clip(y - lo, 0, None), np.clip(hi - y, 0, None)])
        ax.errorbar(df[x_col].to_numpy(dtype=float), y, yerr=yerr, label=label, marker='o',
                    capsize=3, color=palette[idx % len(palette)])
    ax.set_xlabel(x_label)
    ax.set_ylabel(y_label)
    ax.legend()
    return _save(fig, path)


def plot_sweep(series: Sequence[Tuple[str, pd.DataFrame]], parameter: str, path: str) -> str:
    """全局级联频率随扫描参数的变化"""
    return _errorbar_plot(series, "param_value", "frequency_mean", parameter,
                          "Global cascade frequency", path)


def plot_betweenness(series: Sequence[Tuple[str, pd.DataFrame]], path: str) -> str:
    """高介数节点平均度随 s 的变化"""
    return _errorbar_plot(series, "s", "mean_degree", "s",
                          "Mean degree of high-betweenness nodes", path)


def default_labels(paths: Sequence[str]) -> List[str]:
    """默认以所在目录名作标签"""
    return [os.path.basename(os.path.dirname(os.path.abspath(p))) or os.path.basename(p) for p in paths]
