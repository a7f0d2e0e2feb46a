# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""命令行入口：构造参数解析器并把子命令分派到对应的处理函数

退出码：0 成功；1 验证失败；2 用法错误或输入无法读取 / 格式错误。
"""

__all__ = [
    "build_parser",
    "dispatch",
]

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Optional

import yaml

from ..Constants import RUNTIME_INFO, AppConstant, OutputFormat
from ..Core.errors import NcpiError
from . import (
    corpus_commands,
    ideal_commands,
    identity_commands,
    poly_commands,
    proof_commands,
    tensor_commands,
)
from .reporting import render
from .run_config import RunConfig
from .texts import load_command_texts

logger = logging.getLogger(__name__)

_COMMAND_MODULES = (
    poly_commands,
    identity_commands,
    ideal_commands,
    tensor_commands,
    proof_commands,
    corpus_commands,
)


def _common_options(texts: dict[str, str]) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=[f.value for f in OutputFormat], default=None, help=texts.get("--output"))
    common.add_argument("--seed", type=int, default=None, help=texts.get("--seed"))
    common.add_argument("--threads", type=int, default=None, help=texts.get("--threads"))
    common.add_argument("--log-level", default=None, help=texts.get("--log-level"))
    common.add_argument("--field", default=None, help=texts.get("--field"))
    return common


def build_parser() -> argparse.ArgumentParser:
    """构造完整的参数解析器"""

    texts = load_command_texts()
    parser = argparse.ArgumentParser(prog=AppConstant.NAME, description=AppConstant.DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"{AppConstant.NAME} {AppConstant.VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = _common_options(texts)
    for module in _COMMAND_MODULES:
        module.add_parsers(subparsers, common, texts)
    return parser


def _configure_logging(level: Optional[str]) -> None:
    level = (level or RUNTIME_INFO.log_level or "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """解析参数、运行子命令、输出报告

    :param argv: 命令行参数（不含程序名），默认为 sys.argv[1:]
    :return: 退出码
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    _configure_logging(args.log_level)
    try:
        config = RunConfig.from_namespace(args)
        report = args.handler(args, config)
    except (NcpiError, OSError, yaml.YAMLError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 2

    print(render(report))
    return report.exit_code
