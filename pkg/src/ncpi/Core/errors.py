# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""ncpi 中使用的异常类

所有异常均派生自 `NcpiError`，同时继承对应的内置异常类型，便于调用方按内置类型捕获。
验证失败（证书残差、证明被拒绝等）以返回值表示，不抛出异常。
"""

__all__ = [
    "NcpiError",
    "FieldMismatchError",
    "CapExceededError",
    "PreconditionError",
    "ParseError",
    "CircuitStructureError",
    "DocumentError",
]

from typing import Any, Optional


class NcpiError(Exception):
    """ncpi 异常基类"""


class FieldMismatchError(NcpiError, ValueError):
    """参与运算的对象属于不同的域"""


class CapExceededError(NcpiError, RuntimeError):
    """计算规模超出了配置的上限"""

    def __init__(self, message: str, *, where: Any = None, size: Optional[int] = None):
        """
        :param message: 错误信息
        :param where: 超限发生的位置，例如电路门编号
        :param size: 超限时的规模
        """

        super().__init__(message)
        self.where = where
        self.size = size


class PreconditionError(NcpiError, ValueError):
    """输入不满足操作的前置条件"""


class ParseError(NcpiError, ValueError):
    """文本语法错误，携带出错位置（字符偏移量，从 0 开始）"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class CircuitStructureError(NcpiError, ValueError):
    """电路结构错误：存在环、引用了不存在的门等"""


class DocumentError(NcpiError, ValueError):
    """输入文档格式错误"""
