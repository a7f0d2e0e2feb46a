# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""应用程序级常量与各类计算上限"""

__all__ = [
    "AppConstant",
    "Limits",
]

from .runtime_info import RUNTIME_INFO


class AppConstant:
    """应用程序级的常量"""

    NAME = "ncpi"
    VERSION = "0.1.0"
    AUTHORS = ["ncpi developers"]
    LICENSE = "GPL-3.0-or-later"
    DESCRIPTION = "Non-commutative polynomial identities: matrix identities, circuits, proofs"


class Limits:
    """各算法的默认上限与默认参数

    大部分上限均可通过环境变量或命令行参数覆盖，见 `RUNTIME_INFO`
    """

    # 标准多项式 S_n 的 n 上限，项数为 n!
    STANDARD_POLY_CAP = RUNTIME_INFO.standard_cap or 8

    # 符号检查中所有矩阵元多项式的单项式总数上限
    SYMBOLIC_MONOMIAL_CAP = 10**7

    # 矩阵单位检查中赋值数量的上限
    UNIT_ASSIGNMENT_CAP = 10**6

    # 电路展开时单个门多项式的单项式上限
    EXPAND_MONOMIAL_CAP = 10**6

    # 多重线性理想成员判定的变量数上限（多重线性空间维数为 n!）
    MEMBERSHIP_VAR_CAP = 6
    MEMBERSHIP_ARRANGEMENT_CAP = 2 * 10**6

    # 张量秩穷举搜索的候选组合数上限
    RANK_SEARCH_CAP = 10**6
    RANK_ENTRY_CAP = 3**6

    # 素域的模数上限
    PRIME_BOUND = 2**61

    # 随机检查默认参数
    DEFAULT_PRIME = 10007
    DEFAULT_TRIALS = 20
    DEFAULT_SEED = RUNTIME_INFO.seed if RUNTIME_INFO.seed is not None else 0

    # 矩阵降阶 [[F]]_d 的规模常数：size([[F]]_d) <= c * d^3 * size(F)
    LOWERING_SIZE_CONSTANT = 2
