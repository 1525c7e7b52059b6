#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Watts 阈值级联模块
"""

from .cascade_engine import (
    CascadeOutcome,
    activation_requirements,
    brute_force_fixpoint,
    final_active_set,
    run_cascade,
    unactivated_violations,
)
from .seed_selection import Explicit, SeedStrategy, TopDegreeFraction, UniformRandom, select_seeds, top_degree_nodes
from .thresholds import (
    DeltaThreshold,
    ThresholdAssignment,
    ThresholdDistribution,
    UniformThreshold,
    assign_thresholds,
    is_vulnerable,
    stability_kappa,
    vulnerable_fraction,
)

__all__ = [
    'CascadeOutcome', 'activation_requirements', 'brute_force_fixpoint', 'final_active_set',
    'run_cascade', 'unactivated_violations',
    'Explicit', 'SeedStrategy', 'TopDegreeFraction', 'UniformRandom', 'select_seeds', 'top_degree_nodes',
    'DeltaThreshold', 'ThresholdAssignment', 'ThresholdDistribution', 'UniformThreshold',
    'assign_thresholds', 'is_vulnerable', 'stability_kappa', 'vulnerable_fraction',
]
