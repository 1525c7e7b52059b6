#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
网络级联仿真实验室启动器
"""

import sys
from pathlib import Path

# 添加项目根目录到Python路径
root_path = Path(__file__).parent
sys.path.insert(0, str(root_path))

from src.cli_io.cascade_cli import main

if __name__ == "__main__":
    sys.exit(main())
