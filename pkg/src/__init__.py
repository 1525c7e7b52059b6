# -*- coding: utf-8 -*-
"""
网络级联仿真实验室
"""

__version__ = "0.3.0"
