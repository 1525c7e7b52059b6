#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
随机图生成模块
"""

from .line_picking import laplace_G, line_picking_pdf, waxman_q
from .random_graphs import (
    BASpec,
    ERSpec,
    GeneratorSpec,
    PriceSpec,
    WaxmanSpec,
    describe_spec,
    gen_ba,
    gen_er,
    gen_price,
    gen_waxman,
    generate,
    truncated_poisson,
)
from .rng_streams import RngStream, derive_seed

__all__ = [
    'laplace_G', 'line_picking_pdf', 'waxman_q',
    'BASpec', 'ERSpec', 'GeneratorSpec', 'PriceSpec', 'WaxmanSpec', 'describe_spec',
    'gen_ba', 'gen_er', 'gen_price', 'gen_waxman', 'generate', 'truncated_poisson',
    'RngStream', 'derive_seed',
]
