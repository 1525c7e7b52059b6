#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
蒙特卡洛实验模块
"""

from .betweenness_experiment import BetweennessPoint, betweenness_degree_experiment
from .experiment_runner import (
    ExperimentConfig,
    ExperimentSummary,
    RealizationRecord,
    run_batch,
    run_experiment,
    run_realization,
    summarize,
)
from .statistics import (
    EmpiricalMax,
    FractionOfGiant,
    FractionOfNetwork,
    FrequencyInterval,
    GlobalCascadeRule,
    ccdf,
    classify_global,
    frequency_ci,
    intermediate_fraction,
    mean_ci,
)
from .sweep import SWEEP_PARAMETERS, SweepPoint, sweep, with_parameter

__all__ = [
    'BetweennessPoint', 'betweenness_degree_experiment',
    'ExperimentConfig', 'ExperimentSummary', 'RealizationRecord', 'run_batch', 'run_experiment',
    'run_realization', 'summarize',
    'EmpiricalMax', 'FractionOfGiant', 'FractionOfNetwork', 'FrequencyInterval', 'GlobalCascadeRule',
    'ccdf', 'classify_global', 'frequency_ci', 'intermediate_fraction', 'mean_ci',
    'SWEEP_PARAMETERS', 'SweepPoint', 'sweep', 'with_parameter',
]
