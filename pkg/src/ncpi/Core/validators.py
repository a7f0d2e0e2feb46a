# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""此模块包含数个验证器类，用于验证用户输入是否有效

`DocumentPathValidator.validate()` 用于验证用户给定的文档路径（或随包语料名）是否可读；
`PrimeValidator.validate()` 用于验证用户给定的模数是否为可用的素数；
"""

__all__ = [
    "DocumentPathValidator",
    "PrimeValidator",
]

import os
import warnings
from pathlib import Path
from typing import Union

from sympy import isprime

from ..Constants import Limits
from ..Utilities.documents import DocumentOpen


class DocumentPathValidator:
    """根据给定的路径验证文档的有效性"""

    @classmethod
    def validate(cls, document_path: Union[str, Path]) -> bool:
        """验证文档路径是否有效

        :param document_path: 文件路径，或 "corpus/<name>" 形式的语料名
        :return: 文档是否可读
        """

        path = Path(document_path)
        try:
            if path.exists():
                return path.is_file() and os.access(path, os.R_OK)
        except OSError:
            # 例如公式文本过长，超出文件名长度限制
            return False

        # 不在磁盘上时尝试按语料名读取
        try:
            with DocumentOpen(document_path) as f:
                f.read(1)
        except (OSError, ValueError):
            return False
        return True


class PrimeValidator:
    """验证给定的整数是否可以作为素域的模数"""

    @classmethod
    def validate(cls, p: int, degree: int = 0, d: int = 1) -> bool:
        """验证 p 是否为可用的素数

        p 不大于 2·degree·d 时随机检查的误差界失去意义，此时仍视为有效，但发出警告。

        :param p: 模数
        :param degree: 被检查多项式的次数（可选）
        :param d: 矩阵阶数（可选）
        :return: 是否有效
        """

        if not (2 <= p < Limits.PRIME_BOUND and isprime(p)):
            return False
        if degree and p <= 2 * degree * d:
            warnings.warn(
                f"Prime {p} is small for degree {degree} on {d}x{d} matrices; results will be heuristic.",
                RuntimeWarning,
                stacklevel=2,
            )
        return True
