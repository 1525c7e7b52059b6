# -*- coding: utf-8 -*-
"""公共测试夹具"""

import pytest

from src.experiments.experiment_runner import ExperimentConfig
from src.generators.random_graphs import ERSpec
from tests.helpers import path_graph, star_graph


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def star4():
    return star_graph(4)


@pytest.fixture
def small_config():
    return ExperimentConfig(generator=ERSpec(n=120, q=4 / 119), realizations=3,
                            shocks_per_realization=25, master_seed=11)
