# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""保序的并行映射"""

__all__ = ["ordered_map"]

from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> list[R]:
    """对 items 逐个调用 func，结果顺序与输入顺序一致

    :param func: 纯函数
    :param items: 输入序列
    :param threads: 线程数，None 或 1 表示串行
    :return: 结果列表
    """

    items = list(items)
    if not threads or threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))
