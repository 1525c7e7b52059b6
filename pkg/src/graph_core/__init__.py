#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
图结构与结构分析模块
"""

from .graph import CONVENTIONS, Graph, build_graph, undirected_skeleton
from .analysis import (
    BetweennessResult,
    ComponentPartition,
    average_clustering,
    betweenness,
    components,
    degree,
    degree_sequence,
    degree_tail_slope,
    giant_component_nodes,
    high_betweenness_mean_degree,
    in_degree,
    in_degree_sequence,
    mean_degree,
)
from .graph_io import read_graph, write_graph

__all__ = [
    'CONVENTIONS', 'Graph', 'build_graph', 'undirected_skeleton',
    'BetweennessResult', 'ComponentPartition', 'average_clustering', 'betweenness',
    'components', 'degree', 'degree_sequence', 'degree_tail_slope', 'giant_component_nodes',
    'high_betweenness_mean_degree', 'in_degree', 'in_degree_sequence', 'mean_degree',
    'read_graph', 'write_graph',
]
