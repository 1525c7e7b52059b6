#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
可复现的随机流
(seed, stream_id, 用途) 通过 numpy SeedSequence 的 spawn_key 派生独立的 PCG64 生成器。
"""

import hashlib
from dataclasses import dataclass

import numpy as np

from src.errors import ValidationError

# 用途编号
PURPOSE_GRAPH = 0
PURPOSE_THRESHOLDS = 1
PURPOSE_SHOCK = 2

SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class RngStream:
    """一个随机流：相同 (seed, stream_id) 产生相同的随机数"""
    seed: int
    stream_id: int = 0

    def __post_init__(self):
        if not (0 <= self.seed <= SEED_MASK):
            raise ValidationError(f"seed 必须是 64 位无符号整数: {self.seed}")
        if self.stream_id < 0:
            raise ValidationError(f"stream_id 必须非负: {self.stream_id}")

    def generator(self, *purpose: int) -> np.random.Generator:
        seq = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_id, *purpose))
        return np.random.default_rng(np.random.PCG64(seq))


def derive_seed(master_seed: int, *parts) -> int:
    """
    由主种子和参数派生新的 64 位种子
    对 "master_seed:part1:part2..."（各部分取 repr）做 SHA-256，取前 8 字节
    """
    text = ":".join([str(master_seed)] + [repr(p) for p in parts])
    digest = hashlib.sha256(text.encode('utf-8')).digest()
    return int.from_bytes(digest[:8], 'big')
