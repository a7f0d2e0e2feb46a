# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""可复现的随机数工具

每个试验的随机数生成器由 (seed, 试验序号) 唯一确定，与调度顺序无关。
"""

__all__ = [
    "trial_rngs",
    "trial_rng",
    "as_seed",
]

import numpy as np

_SEED_MASK = (1 << 64) - 1


def as_seed(seed: int) -> int:
    """将任意整数规约为 64 位无符号种子"""

    return int(seed) & _SEED_MASK


def trial_rngs(seed: int, count: int) -> list[np.random.Generator]:
    """为 count 个试验派生互相独立的随机数生成器

    :param seed: 64 位种子
    :param count: 试验数量
    :return: 生成器列表，第 i 个生成器只依赖于 seed 与 i
    """

    children = np.random.SeedSequence(as_seed(seed)).spawn(count)
    return [np.random.default_rng(child) for child in children]


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """第 index 个试验的随机数生成器，与 `trial_rngs(seed, n)[index]` 相同"""

    child = np.random.SeedSequence(as_seed(seed), spawn_key=(index,))
    return np.random.default_rng(child)
