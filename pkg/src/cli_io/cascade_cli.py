#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令行入口

子命令:
  generate     生成一个随机图实现，写出边表/坐标文件
  experiment   按配置文件运行蒙特卡洛实验，写出 sizes.csv / summary.json
  sweep        对 s、z 或 c 做参数扫描，写出 sweep.csv 及每个取值的结果
  betweenness  高介数节点平均度随 s 的变化，写出 betweenness.csv
  plot         把上述结果画成 SVG
"""

import argparse
import logging
import os
import sys
from datetime import datetime
from typing import List, Optional

from src import __version__
from src.cli_io.config_loader import (
    build_experiment_config,
    build_generator_spec,
    load_config_file,
    load_experiment_config,
    resolve_output_dir,
    resolve_threads,
)
from src.cli_io.plotting import default_labels, plot_betweenness, plot_ccdf, plot_sweep
from src.cli_io.serializers import (
    read_betweenness_csv,
    read_sizes_csv,
    read_summary_n,
    read_sweep_csv,
    write_betweenness_csv,
    write_manifest,
    write_sizes_csv,
    write_summary_json,
    write_sweep_csv,
)
from src.errors import CascadeLabError, ValidationError
from src.experiments.betweenness_experiment import betweenness_degree_experiment
from src.experiments.experiment_runner import run_experiment
from src.experiments.sweep import SWEEP_PARAMETERS, sweep
from src.generators.random_graphs import describe_spec, generate
from src.generators.rng_streams import RngStream
from src.graph_core.analysis import mean_degree
from src.graph_core.graph_io import write_graph

logger = logging.getLogger(__name__)

LOG_FILE_NAME = "cascade_lab.log"

# z 扫描时，配置文件里缺失的模型参数用占位值补齐（扫描时会被替换）
SWEEP_PLACEHOLDERS = {
    ("z", "ba"): ("m", 1),
    ("z", "price"): ("c", 1.0),
}


def setup_logging(out_dir: str, verbose: bool = False) -> None:
    """配置日志：文件 + 控制台"""
    os.makedirs(out_dir, exist_ok=True)
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(os.path.join(out_dir, LOG_FILE_NAME), encoding='utf-8'),
            logging.StreamHandler()
        ],
        force=True,
    )


def parse_values(text: str) -> List[float]:
    """解析逗号分隔的扫描值"""
    try:
        values = [float(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise ValidationError(f"无法解析扫描值: {text!r}")
    if not values:
        raise ValidationError("扫描值列表不能为空")
    return values


def _value_label(value: float) -> str:
    return format(value, 'g')


def cmd_generate(args) -> int:
    out_dir = resolve_output_dir(args.out)
    setup_logging(out_dir, args.verbose)
    started = datetime.now()

    fields = {key: getattr(args, key) for key in ("model", "n", "s", "z", "q", "m", "c")
              if getattr(args, key) is not None}
    fields["directed"] = args.directed
    spec = build_generator_spec(fields)
    g = generate(spec, RngStream(args.seed, args.stream))

    edge_name = "graph.edgelist"
    outputs = [edge_name]
    positions_name = None
    if g.positions is not None:
        positions_name = "graph.positions"
        outputs.append(positions_name)
    write_graph(g, os.path.join(out_dir, edge_name),
                os.path.join(out_dir, positions_name) if positions_name else None)

    z = mean_degree(g)
    logger.info(f"✅ 已生成 {describe_spec(spec)['model']} 图: n={g.n}, e={g.edge_count}, 平均度 {z:.4f}")
    echo = dict(describe_spec(spec), seed=args.seed, stream=args.stream, realized_mean_degree=z)
    write_manifest(out_dir, "generate", echo, args.seed, started, outputs)
    return 0


def _write_experiment_outputs(summary, config, out_dir: str, prefix: str = "") -> List[str]:
    sizes_name = os.path.join(prefix, "sizes.csv") if prefix else "sizes.csv"
    summary_name = os.path.join(prefix, "summary.json") if prefix else "summary.json"
    write_sizes_csv(summary, os.path.join(out_dir, sizes_name))
    write_summary_json(summary, config.describe(), os.path.join(out_dir, summary_name))
    return [sizes_name, summary_name]


def cmd_experiment(args) -> int:
    out_dir = resolve_output_dir(args.out)
    setup_logging(out_dir, args.verbose)
    started = datetime.now()

    config = load_experiment_config(args.config)
    summary = run_experiment(config, n_jobs=resolve_threads(args.threads))
    outputs = _write_experiment_outputs(summary, config, out_dir)
    write_manifest(out_dir, "experiment", config.describe(), config.master_seed, started, outputs)
    return 0


def cmd_sweep(args) -> int:
    out_dir = resolve_output_dir(args.out)
    setup_logging(out_dir, args.verbose)
    started = datetime.now()

    if args.param not in SWEEP_PARAMETERS:
        raise ValidationError(f"未知的扫描参数: {args.param}")
    values = parse_values(args.values)
    cfg = load_config_file(args.config)
    placeholder = SWEEP_PLACEHOLDERS.get((args.param, cfg.get("model")))
    if placeholder:
        cfg.setdefault(*placeholder)
    elif args.param not in cfg and not (args.param == "z" and "q" in cfg):
        cfg[args.param] = values[0]
    base_config = build_experiment_config(cfg)

    points = sweep(args.param, values, base_config, n_jobs=resolve_threads(args.threads))

    outputs = []
    for point in points:
        prefix = f"{args.param}_{_value_label(point.value)}"
        outputs.extend(_write_experiment_outputs(point.summary, point.config, out_dir, prefix))
    write_sweep_csv(points, os.path.join(out_dir, "sweep.csv"))
    outputs.append("sweep.csv")

    echo = dict(base_config.describe(), sweep_parameter=args.param, sweep_values=values)
    write_manifest(out_dir, "sweep", echo, base_config.master_seed, started, outputs)
    return 0


def cmd_betweenness(args) -> int:
    out_dir = resolve_output_dir(args.out)
    setup_logging(out_dir, args.verbose)
    started = datetime.now()

    s_values = parse_values(args.s_values)
    points = betweenness_degree_experiment(s_values, args.n, args.z, args.realizations,
                                           tau=args.tau, master_seed=args.seed,
                                           n_jobs=resolve_threads(args.threads))
    write_betweenness_csv(points, os.path.join(out_dir, "betweenness.csv"))
    echo = {"s_values": s_values, "n": args.n, "z": args.z, "realizations": args.realizations,
            "tau": args.tau, "master_seed": args.seed}
    write_manifest(out_dir, "betweenness", echo, args.seed, started, ["betweenness.csv"])
    return 0


def cmd_plot(args) -> int:
    output = args.output or os.path.join(resolve_output_dir(args.out), f"{args.kind}.svg")
    setup_logging(os.path.dirname(os.path.abspath(output)), args.verbose)

    labels = args.labels.split(',') if args.labels else default_labels(args.inputs)
    if len(labels) != len(args.inputs):
        raise ValidationError(f"标签数量 {len(labels)} 与输入文件数量 {len(args.inputs)} 不一致")

    if args.kind == "ccdf":
        series = []
        for label, path in zip(labels, args.inputs):
            df = read_sizes_csv(path)
            n = args.n or read_summary_n(path)
            if n is None:
                raise ValidationError(f"无法确定 {path} 的网络规模 n，请使用 --n 指定")
            series.append((label, df["size"].tolist(), n))
        plot_ccdf(series, output)
    elif args.kind == "sweep":
        series = [(label, read_sweep_csv(path)) for label, path in zip(labels, args.inputs)]
        plot_sweep(series, args.param or "parameter", output)
    else:
        series = [(label, read_betweenness_csv(path)) for label, path in zip(labels, args.inputs)]
        plot_betweenness(series, output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cascade-lab", description="网络级联仿真实验室")
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, threads: bool = True):
        p.add_argument('--out', help="输出目录（默认读取环境变量，否则 results）")
        p.add_argument('--verbose', action='store_true', help="输出调试日志")
        if threads:
            p.add_argument('--threads', type=int, help="并行 worker 数")

    p = sub.add_parser("generate", help="生成随机图")
    p.add_argument('--model', required=True, choices=["er", "waxman", "ba", "price"])
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--s', type=float)
    p.add_argument('--z', type=float)
    p.add_argument('--q', type=float)
    p.add_argument('--m', type=int)
    p.add_argument('--c', type=float)
    p.add_argument('--directed', action='store_true')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--stream', type=int, default=0)
    common(p, threads=False)
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("experiment", help="运行实验")
    p.add_argument('config', help="实验配置 JSON")
    common(p)
    p.set_defaults(handler=cmd_experiment)

    p = sub.add_parser("sweep", help="参数扫描")
    p.add_argument('config', help="基础实验配置 JSON")
    p.add_argument('--param', required=True, choices=list(SWEEP_PARAMETERS))
    p.add_argument('--values', required=True, help="逗号分隔，例如 0,2,4,6,8,10")
    common(p)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("betweenness", help="高介数节点平均度实验")
    p.add_argument('--s-values', dest="s_values", required=True)
    p.add_argument('--n', type=int, default=10000)
    p.add_argument('--z', type=float, default=6.0)
    p.add_argument('--realizations', type=int, default=30)
    p.add_argument('--tau', type=float, default=0.03)
    p.add_argument('--seed', type=int, default=0)
    common(p)
    p.set_defaults(handler=cmd_betweenness)

    p = sub.add_parser("plot", help="绘制 SVG")
    p.add_argument('inputs', nargs='+')
    p.add_argument('--kind', required=True, choices=["ccdf", "sweep", "betweenness"])
    p.add_argument('--labels', help="逗号分隔的图例标签")
    p.add_argument('--n', type=int, help="网络规模（CCDF；默认读取同目录 summary.json）")
    p.add_argument('--param', help="扫描参数名（横轴标签）")
    p.add_argument('--output', help="SVG 路径")
    common(p, threads=False)
    p.set_defaults(handler=cmd_plot)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CascadeLabError as e:
        logger.error(f"❌ {e}")
        print(f"❌ {e}", file=sys.stderr)
        return 1
    except OSError as e:
        logger.error(f"❌ 文件读写失败: {e}")
        print(f"❌ 文件读写失败: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
