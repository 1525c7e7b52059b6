#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令行、配置与结果文件模块
"""

from .cascade_cli import main

__all__ = ['main']
