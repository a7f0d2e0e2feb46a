# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""基于 sympy DomainMatrix 的精确线性代数工具"""

__all__ = [
    "SpanSolution",
    "matrix_from_rows",
    "matrix_rows",
    "scalar_matrix",
    "zero_matrix",
    "identity_matrix",
    "matrix_is_zero",
    "rank_of_rows",
    "solve_in_span",
]

from collections.abc import Hashable, Mapping, Sequence
from typing import NamedTuple, Optional

from sympy.polys.matrices import DomainMatrix


class SpanSolution(NamedTuple):
    """线性方程组 sum_k a_k v_k = t 的求解结果"""

    in_span: bool
    coefficients: Optional[list]  # 与输入向量一一对应，不在张成空间内时为 None
    rank: int  # 输入向量张成空间的维数
    pivots: tuple[int, ...]  # 一组极大线性无关向量的下标


def matrix_from_rows(rows: Sequence[Sequence], domain) -> DomainMatrix:
    rows = [list(row) for row in rows]
    width = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), width), domain)


def matrix_rows(matrix: DomainMatrix) -> list[list]:
    return matrix.to_list()


def scalar_matrix(value, d: int, domain) -> DomainMatrix:
    rows = [[value if i == j else domain.zero for j in range(d)] for i in range(d)]
    return DomainMatrix(rows, (d, d), domain)


def zero_matrix(d: int, domain) -> DomainMatrix:
    return DomainMatrix.zeros((d, d), domain)


def identity_matrix(d: int, domain) -> DomainMatrix:
    return scalar_matrix(domain.one, d, domain)


def matrix_is_zero(matrix: DomainMatrix) -> bool:
    return all(not value for row in matrix.to_list() for value in row)


def rank_of_rows(rows: Sequence[Sequence], domain) -> int:
    if not rows:
        return 0
    return matrix_from_rows(rows, domain).rank()


def solve_in_span(
    vectors: Sequence[Mapping[Hashable, object]],
    target: Mapping[Hashable, object],
    domain,
) -> SpanSolution:
    """判断 target 是否属于 vectors 的张成空间，若是则给出组合系数

    向量以稀疏字典 {坐标: 域元素} 表示。先对以向量为列的矩阵做行最简形，选出线性无关列；
    再对 [无关列 | target] 做行最简形，读出组合系数。

    :param vectors: 向量列表
    :param target: 目标向量
    :param domain: sympy 域（须为域，例如 QQ 或 GF(p)）
    :return: SpanSolution
    """

    coordinates = sorted(
        {key for vec in vectors for key in vec} | set(target),
        key=repr,
    )
    row_of = {key: i for i, key in enumerate(coordinates)}
    height = len(coordinates)

    if not vectors:
        zero_target = all(not value for value in target.values())
        return SpanSolution(zero_target, [] if zero_target else None, 0, ())

    def as_columns(columns: Sequence[Mapping[Hashable, object]]) -> DomainMatrix:
        dod: dict[int, dict[int, object]] = {}
        for j, vec in enumerate(columns):
            for key, value in vec.items():
                if value:
                    dod.setdefault(row_of[key], {})[j] = value
        return DomainMatrix(dod, (height, len(columns)), domain)

    if height == 0:
        return SpanSolution(True, [domain.zero] * len(vectors), 0, ())

    _, pivots = as_columns(vectors).rref()
    pivots = tuple(pivots)
    independent = [vectors[j] for j in pivots]
    reduced, aug_pivots = as_columns([*independent, target]).rref()
    last = len(independent)
    if last in tuple(aug_pivots):
        return SpanSolution(False, None, len(pivots), pivots)

    rows = reduced.to_list()
    coefficients = [domain.zero] * len(vectors)
    for r, j in enumerate(pivots):
        coefficients[j] = rows[r][last]
    return SpanSolution(True, coefficients, len(pivots), pivots)
