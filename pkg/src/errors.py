#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
统一异常定义
"""


class CascadeLabError(Exception):
    """所有实验室异常的基类"""


class ValidationError(CascadeLabError, ValueError):
    """输入参数或数据不合法"""


class InfeasibleParameterError(ValidationError):
    """参数组合不可实现（例如 Waxman 的 q 超过 1）"""

    def __init__(self, message: str, max_achievable: float):
        super().__init__(message)
        self.max_achievable = max_achievable


class GuardError(CascadeLabError, RuntimeError):
    """防误用保护触发"""


class SchemaError(ValidationError):
    """配置文件字段错误"""

    def __init__(self, field: str, message: str):
        super().__init__(f"配置字段 '{field}' 错误: {message}")
        self.field = field
