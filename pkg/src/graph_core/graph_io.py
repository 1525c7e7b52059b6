#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
边表与坐标文件读写

边表: 可选表头 "# n=<n> directed=<0|1>"，之后每行 "u v"（从 0 开始）
坐标: 每行 "i x y"
"""

import logging
import os
import re
from typing import Optional

from src.errors import ValidationError
from src.graph_core.graph import Graph, build_graph

logger = logging.getLogger(__name__)

HEADER_PATTERN = re.compile(r'^#\s*n=(\d+)\s+directed=([01])\s*$')


def write_graph(g: Graph, edge_path: str, positions_path: Optional[str] = None) -> None:
    """写出边表；图带坐标且给出 positions_path 时同时写出坐标"""
    os.makedirs(os.path.dirname(os.path.abspath(edge_path)), exist_ok=True)
    with open(edge_path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(f"# n={g.n} directed={int(g.directed)}\n")
        for u, v in g.edge_list():
            f.write(f"{u} {v}\n")

    if positions_path and g.positions is not None:
        with open(positions_path, 'w', encoding='utf-8', newline='\n') as f:
            for i, (x, y) in enumerate(g.positions):
                f.write(f"{i} {float(x)!r} {float(y)!r}\n")
    logger.debug(f"图已写出: {edge_path}")


def read_graph(edge_path: str, positions_path: Optional[str] = None) -> Graph:
    """读取边表（及坐标），返回不可变图；无表头时 n 取最大端点 + 1，按无向图处理"""
    n = None
    directed = False
    edges = []
    with open(edge_path, 'r', encoding='utf-8') as f:
        for line_no, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith('#'):
                match = HEADER_PATTERN.match(line)
                if match and n is None:
                    n = int(match.group(1))
                    directed = match.group(2) == '1'
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValidationError(f"{edge_path} 第 {line_no} 行格式错误: '{line}'")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ValidationError(f"{edge_path} 第 {line_no} 行不是整数对: '{line}'")

    if n is None:
        n = max((max(u, v) for u, v in edges), default=-1) + 1

    positions = None
    if positions_path:
        positions = [None] * n
        with open(positions_path, 'r', encoding='utf-8') as f:
            for line_no, line in enumerate(f, start=1):
                parts = line.split()
                if not parts:
                    continue
                if len(parts) != 3:
                    raise ValidationError(f"{positions_path} 第 {line_no} 行格式错误")
                i = int(parts[0])
                if not (0 <= i < n):
                    raise ValidationError(f"{positions_path} 第 {line_no} 行节点 {i} 超出范围")
                positions[i] = (float(parts[1]), float(parts[2]))
        if any(p is None for p in positions):
            raise ValidationError(f"{positions_path} 缺少部分节点坐标")

    return build_graph(n, edges, directed=directed, positions=positions)
