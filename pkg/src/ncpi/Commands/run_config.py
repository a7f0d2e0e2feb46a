# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""此模块主要包含运行配置类 `RunConfig`，合并命令行参数与环境变量

优先级：命令行参数 > 环境变量（`RUNTIME_INFO`）> 默认值
"""

__all__ = ["RunConfig"]

import argparse
from dataclasses import dataclass
from typing import Any, Optional

from ..Constants import RUNTIME_INFO, Limits, OutputFormat
from ..Core.fields import QQ_FIELD, Field, parse_field
from ..Utilities.random_tools import as_seed


@dataclass(frozen=True)
class RunConfig:
    """一次命令行调用的配置，报告中总是回显 seed"""

    command: str
    inputs: tuple[str, ...] = ()
    field: Field = QQ_FIELD
    d: Optional[int] = None
    seed: int = Limits.DEFAULT_SEED
    threads: Optional[int] = None
    output: OutputFormat = OutputFormat.text

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        """由 argparse 的解析结果构造配置

        :param args: 解析结果，子命令未定义的属性取默认值
        :return: RunConfig
        """

        command = " ".join(part for part in (args.command, getattr(args, "action", None)) if part)
        inputs = tuple(str(v) for v in (getattr(args, "inputs", None) or ()))
        field = parse_field(args.field) if getattr(args, "field", None) is not None else QQ_FIELD

        seed = args.seed if args.seed is not None else Limits.DEFAULT_SEED
        threads = args.threads if args.threads is not None else RUNTIME_INFO.threads
        output = args.output or RUNTIME_INFO.output or OutputFormat.text.value

        return cls(
            command=command,
            inputs=inputs,
            field=field,
            d=getattr(args, "d", None),
            seed=as_seed(seed),
            threads=threads,
            output=OutputFormat(output),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": list(self.inputs),
            "field": str(self.field),
            "d": self.d,
            "seed": self.seed,
            "threads": self.threads,
        }
