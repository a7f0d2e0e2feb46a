# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""运行时信息，存储于全局变量 `RUNTIME_INFO` 中

目前包括 CPU 数量，以及通过环境变量给出的随机种子、线程数、输出格式、日志级别、标准多项式上限。
命令行参数的优先级高于环境变量。
"""

__all__ = [
    "RuntimeInfo",
    "get_runtime_info",
    "RUNTIME_INFO",
]

import os
import warnings
from collections.abc import Mapping
from typing import NamedTuple, Optional


class RuntimeInfo(NamedTuple):
    """运行时信息数据结构类"""

    cpu_count: int  # 可用 CPU 数量
    seed: Optional[int]  # NCPI_SEED
    threads: Optional[int]  # NCPI_THREADS
    output: Optional[str]  # NCPI_OUTPUT，json 或 text
    log_level: Optional[str]  # NCPI_LOG_LEVEL
    standard_cap: Optional[int]  # NCPI_STANDARD_CAP


def _env_int(environ: Mapping[str, str], name: str) -> Optional[int]:
    """读取整数型环境变量，格式错误时发出警告并忽略

    :param environ: 环境变量字典
    :param name: 变量名
    :return: 整数值或 None
    """

    raw = environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw, 0)
    except ValueError:
        warnings.warn(
            f"Ignoring environment variable {name}={raw!r}: not an integer.",
            RuntimeWarning,
            stacklevel=2,
        )
        return None


def get_runtime_info(environ: Optional[Mapping[str, str]] = None) -> RuntimeInfo:
    """从环境变量构造运行时信息

    :param environ: 环境变量字典，默认为 os.environ
    :return: RuntimeInfo
    """

    if environ is None:
        environ = os.environ

    output = environ.get("NCPI_OUTPUT")
    if output is not None and output not in ("json", "text"):
        warnings.warn(
            f"Ignoring environment variable NCPI_OUTPUT={output!r}: expected json or text.",
            RuntimeWarning,
            stacklevel=2,
        )
        output = None

    return RuntimeInfo(
        cpu_count=os.cpu_count() or 1,
        seed=_env_int(environ, "NCPI_SEED"),
        threads=_env_int(environ, "NCPI_THREADS"),
        output=output,
        log_level=environ.get("NCPI_LOG_LEVEL"),
        standard_cap=_env_int(environ, "NCPI_STANDARD_CAP"),
    )


# 全局变量 RUNTIME_INFO
RUNTIME_INFO = get_runtime_info()
