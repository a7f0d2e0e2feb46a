# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""s-多项式与张量

s-多项式是标准多项式 S_2d(x_j1, ..., x_j2d)（j1 < ... < j2d）的 0/1 组合。
2d+1 阶张量 A 对应 n 个多项式 f_j0 = sum A(j0, j1..j2d)·S_2d(x_j1, ..., x_j2d)，
A 的一个秩分解可直接转化为只用 rank(A) 个 S_2d 实例的生成证书。
"""

__all__ = [
    "Tensor",
    "RankDecomposition",
    "RankResult",
    "CountingBound",
    "make_s_poly",
    "poly_from_tensor",
    "cert_from_decomposition",
    "tensor_rank_bruteforce",
    "phi_map",
    "phi_map_closed_form",
    "counting_bound",
    "tensor_from_document",
    "tensor_to_document",
]

import functools
import itertools
import logging
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field as dataclass_field
from typing import Any, NamedTuple, Optional

import numpy as np
from sympy import N, binomial, log
from sympy.polys.matrices import DomainMatrix

from ..Constants import Limits
from ..Utilities.linalg import rank_of_rows, solve_in_span
from ..Utilities.parallel import ordered_map
from .errors import CapExceededError, DocumentError, PreconditionError
from .fields import QQ_FIELD, Field, parse_field
from .freealg import NcPoly, standard_of, standard_poly, x
from .ideals import GenerationCertificate, SubstitutionInstance, Summand

logger = logging.getLogger(__name__)


class Tensor:
    """稠密张量 [n]^order -> 域，对外的下标从 1 开始"""

    __slots__ = ("values", "field")

    def __init__(self, values: np.ndarray, field: Field = QQ_FIELD):
        if values.ndim < 1 or len(set(values.shape)) != 1:
            raise PreconditionError(f"Tensor must be cubical, got shape {values.shape}.")
        self.values = values
        self.field = field

    @classmethod
    def zeros(cls, order: int, side: int, field: Field = QQ_FIELD) -> "Tensor":
        if order < 1 or side < 1:
            raise PreconditionError("Tensor order and side must be positive.")
        return cls(np.full((side,) * order, field.zero, dtype=object), field)

    @classmethod
    def from_entries(
        cls, order: int, side: int, entries: Iterable[tuple[Sequence[int], Any]], field: Field = QQ_FIELD
    ) -> "Tensor":
        """由稀疏的 (下标, 值) 列表构造，重复下标的值相加

        :raise PreconditionError: 下标个数与阶数不符或越界
        """

        tensor = cls.zeros(order, side, field)
        for indices, value in entries:
            index = tensor._position(indices)
            tensor.values[index] = tensor.values[index] + field(value)
        return tensor

    @classmethod
    def simple(cls, vectors: Sequence[Sequence[Any]], field: Field = QQ_FIELD) -> "Tensor":
        """简单张量 a_1 ⊗ ... ⊗ a_r"""

        arrays = [np.array([field(v) for v in vector], dtype=object) for vector in vectors]
        if not arrays or len({len(a) for a in arrays}) != 1:
            raise PreconditionError("Simple tensor needs vectors of one common length.")
        return cls(functools.reduce(np.multiply.outer, arrays), field)

    @property
    def order(self) -> int:
        return self.values.ndim

    @property
    def side(self) -> int:
        return self.values.shape[0]

    def _position(self, indices: Sequence[int]) -> tuple[int, ...]:
        if len(indices) != self.order or any(not (1 <= i <= self.side) for i in indices):
            raise PreconditionError(f"Index {tuple(indices)} out of range for order {self.order}, side {self.side}.")
        return tuple(i - 1 for i in indices)

    def __getitem__(self, indices: Sequence[int]) -> Any:
        return self.values[self._position(indices)]

    def entries(self) -> list[tuple[tuple[int, ...], Any]]:
        """非零元，按下标字典序"""

        return [
            (tuple(i + 1 for i in index), value)
            for index, value in np.ndenumerate(self.values)
            if value
        ]

    def is_zero(self) -> bool:
        return not self.entries()

    def __add__(self, other: "Tensor") -> "Tensor":
        self.field.check_same(other.field)
        if self.values.shape != other.values.shape:
            raise PreconditionError("Tensor shapes differ.")
        return Tensor(self.values + other.values, self.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (
            self.field == other.field
            and self.values.shape == other.values.shape
            and all(a == b for a, b in zip(self.values.flat, other.values.flat))
        )

    def __repr__(self) -> str:
        return f"Tensor(order={self.order}, side={self.side}, nonzeros={len(self.entries())}, field={self.field})"

    def slices(self) -> list[list[Any]]:
        """第 0 个方向的切片，各自展平为向量"""

        return [list(self.values[j].flat) for j in range(self.side)]

    def flattening_rank(self) -> int:
        """第 0 个方向展开矩阵的秩，是张量秩的下界"""

        return rank_of_rows(self.slices(), self.field.domain)


@dataclass
class RankDecomposition:
    """简单张量之和；terms 中每项为 order 个长度为 side 的向量"""

    order: int
    side: int
    field: Field = QQ_FIELD
    terms: list[list[list[Any]]] = dataclass_field(default_factory=list)

    def __post_init__(self) -> None:
        for term in self.terms:
            if len(term) != self.order or any(len(vector) != self.side for vector in term):
                raise PreconditionError(
                    f"Malformed simple tensor: expected {self.order} vectors of length {self.side}."
                )
        self.terms = [[[self.field(v) for v in vector] for vector in term] for term in self.terms]

    def __len__(self) -> int:
        return len(self.terms)

    def tensor(self) -> Tensor:
        total = Tensor.zeros(self.order, self.side, self.field)
        for term in self.terms:
            total = total + Tensor.simple(term, self.field)
        return total


# s-多项式


def _check_order(order: int) -> int:
    if order < 3 or order % 2 == 0:
        raise PreconditionError(f"Tensor order must be 2d+1 with d >= 1, got {order}.")
    return (order - 1) // 2


def make_s_poly(coeffs: Mapping[Sequence[int], int], n: int, d: int, field: Field = QQ_FIELD) -> NcPoly:
    """s-多项式 sum_{j1<...<j2d} c_j · S_2d(x_j1, ..., x_j2d)

    :param coeffs: 严格递增的下标组到 0/1 系数的映射
    :raise PreconditionError: 系数不是 0/1、下标组不合法或 2d > n
    """

    if d < 1 or 2 * d > n:
        raise PreconditionError(f"Need 1 <= d and 2d <= n, got n={n}, d={d}.")
    result = NcPoly.zero(field)
    for indices, c in sorted(coeffs.items()):
        indices = tuple(indices)
        if c not in (0, 1):
            raise PreconditionError(f"s-polynomial coefficients must be 0 or 1, got {c}.")
        if len(indices) != 2 * d or any(not (1 <= j <= n) for j in indices) or list(indices) != sorted(set(indices)):
            raise PreconditionError(f"Invalid index tuple {indices} for n={n}, d={d}.")
        if c:
            result = result + standard_poly([x(j) for j in indices], field)
    return result


def _permutation_sign(indices: Sequence[int]) -> int:
    inversions = sum(1 for a, b in itertools.combinations(indices, 2) if a > b)
    return -1 if inversions % 2 else 1


def poly_from_tensor(tensor: Tensor) -> list[NcPoly]:
    """张量对应的 n 个多项式

    S_2d 是交错的，先按下标集合合并系数（带置换符号），再对每个递增下标组计算一次 S_2d。

    :raise PreconditionError: 阶数不是 2d+1
    :raise CapExceededError: 2d 超过标准多项式上限
    """

    d = _check_order(tensor.order)
    field = tensor.field
    grouped: list[dict[tuple[int, ...], Any]] = [{} for _ in range(tensor.side)]
    for indices, value in tensor.entries():
        j0, rest = indices[0], indices[1:]
        if len(set(rest)) != len(rest):
            continue
        key = tuple(sorted(rest))
        signed = value if _permutation_sign(rest) > 0 else -value
        bucket = grouped[j0 - 1]
        bucket[key] = bucket.get(key, field.zero) + signed

    cache: dict[tuple[int, ...], NcPoly] = {}
    result = []
    for bucket in grouped:
        poly = NcPoly.zero(field)
        for key, c in sorted(bucket.items()):
            if not c:
                continue
            if key not in cache:
                cache[key] = standard_poly([x(j) for j in key], field)
            poly = poly + cache[key].scale(c)
        result.append(poly)
    return result


def cert_from_decomposition(decomposition: RankDecomposition) -> list[GenerationCertificate]:
    """由秩分解构造生成证书

    每个简单张量 a_0 ⊗ a_1 ⊗ ... ⊗ a_2d 给出实例 S_2d(L_1, ..., L_2d)，L_m = sum_j a_m(j) x_j，
    f_j0 的证书为 sum_i a_0^(i)(j0) · S_2d(L^(i))，n 个证书共用同一组实例。

    :raise PreconditionError: 分解格式错误
    """

    d = _check_order(decomposition.order)
    field = decomposition.field
    n = decomposition.side
    slots = [x(m) for m in range(1, 2 * d + 1)]
    element = standard_poly(slots, field)
    targets = poly_from_tensor(decomposition.tensor())

    instances = []
    for term in decomposition.terms:
        sigma = {
            slot: NcPoly({(x(j),): c for j, c in enumerate(vector, start=1)}, field)
            for slot, vector in zip(slots, term[1:])
        }
        instances.append(SubstitutionInstance(f"S{2 * d}", element, sigma))

    certificates = []
    for j0 in range(n):
        summands = [
            Summand(NcPoly.constant(term[0][j0], field), instance, NcPoly.one(field))
            for term, instance in zip(decomposition.terms, instances)
            if term[0][j0]
        ]
        certificates.append(GenerationCertificate(targets[j0], summands))
    return certificates


# 张量秩


class RankResult(NamedTuple):
    rank: Optional[int]  # 超过 max_rank 时为 None
    exceeded: bool
    decomposition: Optional[RankDecomposition]
    candidates_checked: int


def _projective_vectors(side: int, field: Field) -> list[tuple]:
    """首个非零分量为 1 的非零向量（射影代表元）"""

    p = field.characteristic
    vectors = []
    for values in itertools.product(range(p), repeat=side):
        nonzero = [v for v in values if v]
        if nonzero and nonzero[0] == 1:
            vectors.append(tuple(field(v) for v in values))
    return vectors


def tensor_rank_bruteforce(
    tensor: Tensor, max_rank: int, threads: Optional[int] = None
) -> RankResult:
    """小素域上张量秩的穷举

    A 的秩不超过 k 当且仅当 A 的全部第 0 方向切片落在 k 个 (order-1) 阶简单张量张成的空间中。
    简单张量只取射影代表元，候选组合按组合序枚举，从展开矩阵的秩开始逐个增大 k。

    :param tensor: 素域上的张量
    :param max_rank: 搜索的最大秩
    :param threads: 并行线程数，结果与线程数无关
    :raise PreconditionError: 张量不在素域上
    :raise CapExceededError: 张量过大或候选组合数超过上限
    """

    field = tensor.field
    if not field.is_prime_field:
        raise PreconditionError("Brute-force rank needs a prime field.")
    if tensor.values.size > Limits.RANK_ENTRY_CAP:
        raise CapExceededError(
            f"Tensor has {tensor.values.size} entries (cap {Limits.RANK_ENTRY_CAP}).", size=tensor.values.size
        )
    K = field.domain
    order, side = tensor.order, tensor.side
    if order < 2:
        raise PreconditionError("Brute-force rank needs a tensor of order at least 2.")
    slices = tensor.slices()
    lower = tensor.flattening_rank()
    if lower == 0:
        return RankResult(0, False, RankDecomposition(order, side, field, []), 0)

    p = field.characteristic
    pool = ((p**side - 1) // (p - 1)) ** (order - 1)
    if pool > Limits.RANK_SEARCH_CAP:
        raise CapExceededError(
            f"{pool} projective simple tensors exceed the search cap {Limits.RANK_SEARCH_CAP}.", size=pool
        )
    vectors = _projective_vectors(side, field)
    candidates = list(itertools.product(vectors, repeat=order - 1))
    flat = [list(Tensor.simple(c, field).values.flat) for c in candidates]

    checked = 0
    for k in range(lower, max_rank + 1):
        combos_total = math.comb(len(candidates), k)
        if checked + combos_total > Limits.RANK_SEARCH_CAP:
            raise CapExceededError(
                f"Rank search at k={k} needs {combos_total} candidate sets (cap {Limits.RANK_SEARCH_CAP}).",
                size=combos_total,
            )

        def contains(combo: tuple[int, ...]) -> bool:
            rows = [flat[i] for i in combo]
            return rank_of_rows(rows + slices, K) == rank_of_rows(rows, K)

        combos = list(itertools.combinations(range(len(candidates)), k))
        checked += len(combos)
        if threads and threads > 1:
            hits = ordered_map(contains, combos, threads)
            found = next((combo for combo, hit in zip(combos, hits) if hit), None)
        else:
            found = next((combo for combo in combos if contains(combo)), None)
        if found is None:
            continue

        columns = [dict(enumerate(flat[i])) for i in found]
        weights = []
        for vector in slices:
            solution = solve_in_span(columns, dict(enumerate(vector)), K)
            assert solution.coefficients is not None
            weights.append(solution.coefficients)
        terms = [
            [[weights[j0][t] for j0 in range(side)], *[list(v) for v in candidates[i]]]
            for t, i in enumerate(found)
        ]
        logger.debug("Tensor rank %d found after %d candidate sets.", k, checked)
        return RankResult(k, False, RankDecomposition(order, side, field, terms), checked)

    return RankResult(None, True, None, checked)


# 多项式映射与计数界


def _check_phi_shapes(c: Sequence[Sequence[Any]], a: Sequence[Sequence[Sequence[Any]]], n: int, d: int, l: int) -> None:
    if len(c) != n or any(len(row) != l for row in c):
        raise PreconditionError(f"c must have shape ({n}, {l}).")
    if len(a) != l or any(len(block) != 2 * d or any(len(row) != n for row in block) for block in a):
        raise PreconditionError(f"a must have shape ({l}, {2 * d}, {n}).")


def phi_map(
    c: Sequence[Sequence[Any]],
    a: Sequence[Sequence[Sequence[Any]]],
    n: int,
    d: int,
    l: int,
    field: Field = QQ_FIELD,
) -> Tensor:
    """多项式映射：参数 (c, a) 到 s-多项式组合的系数张量

    P_i = sum_k c[i][k] · S_2d(sum_m a[k][1][m] x_m, ..., sum_m a[k][2d][m] x_m)，
    展开后读取递增单词 x_j1 ... x_j2d 的系数，即 S_2d(x_j1, ..., x_j2d) 在标准多项式基下的系数。

    :param c: 形状 (n, l)
    :param a: 形状 (l, 2d, n)
    :return: 2d+1 阶张量，(i, j1..j2d) 处为 P_i 中 S_2d(x_j1..x_j2d) 的系数，非递增下标处为 0
    :raise PreconditionError: 参数形状不符
    """

    _check_phi_shapes(c, a, n, d, l)
    combos = []
    for k in range(l):
        forms = [NcPoly({(x(m),): field(v) for m, v in enumerate(row, start=1)}, field) for row in a[k]]
        combos.append(standard_of(forms))

    entries = []
    for i in range(n):
        P = NcPoly.zero(field)
        for k in range(l):
            P = P + combos[k].scale(field(c[i][k]))
        for J in itertools.combinations(range(1, n + 1), 2 * d):
            value = P.coefficient(tuple(x(j) for j in J))
            if value:
                entries.append(((i + 1, *J), value))
    return Tensor.from_entries(2 * d + 1, n, entries, field)


def phi_map_closed_form(
    c: Sequence[Sequence[Any]],
    a: Sequence[Sequence[Sequence[Any]]],
    n: int,
    d: int,
    l: int,
    field: Field = QQ_FIELD,
) -> Tensor:
    """多项式映射的闭式：(i, J) 处的值为 sum_k c[i][k] · det(a_k 的第 J 列构成的 2d×2d 子矩阵)"""

    _check_phi_shapes(c, a, n, d, l)
    K = field.domain
    entries = []
    for J in itertools.combinations(range(n), 2 * d):
        minors = [
            DomainMatrix([[field(a[k][r][j]) for j in J] for r in range(2 * d)], (2 * d, 2 * d), K).det()
            for k in range(l)
        ]
        for i in range(n):
            value = K.zero
            for k in range(l):
                value += field(c[i][k]) * minors[k]
            if value:
                entries.append(((i + 1, *(j + 1 for j in J)), value))
    return Tensor.from_entries(2 * d + 1, n, entries, field)


class CountingBound(NamedTuple):
    value: str  # 十进制近似
    binomial: int  # C(n, 2d)，精确值
    expression: str  # 精确表达式


def counting_bound(n: int, d: int, digits: int = 15) -> CountingBound:
    """计数界 C(n, 2d)·ln 2 / ((2d+1)·ln(4d+2))

    :raise PreconditionError: d < 1
    """

    if d < 1:
        raise PreconditionError("counting_bound needs d >= 1.")
    if n < 2 * d:
        return CountingBound("0", 0, "0")
    coefficient = int(binomial(n, 2 * d))
    expr = coefficient * log(2) / ((2 * d + 1) * log(4 * d + 2))
    return CountingBound(str(N(expr, digits)), coefficient, str(expr))


# 文档


def tensor_from_document(document: Mapping[str, Any]) -> tuple[Tensor, Optional[RankDecomposition]]:
    """读取张量文档 {field, order, side, entries: [[i0, ..., value], ...], decomposition: [...]}

    只给出 decomposition 时张量为分解之和。
    """

    if not isinstance(document, Mapping) or "order" not in document or "side" not in document:
        raise DocumentError("Tensor document needs 'order' and 'side'.")
    field = parse_field(document.get("field", "QQ"))
    order, side = int(document["order"]), int(document["side"])
    decomposition = None
    if "decomposition" in document:
        decomposition = RankDecomposition(order, side, field, document["decomposition"] or [])
    if "entries" in document:
        entries = []
        for record in document["entries"] or []:
            if not isinstance(record, Sequence) or len(record) != order + 1:
                raise DocumentError(f"Tensor entry {record!r} needs {order} indices and a value.")
            entries.append(([int(i) for i in record[:-1]], str(record[-1])))
        tensor = Tensor.from_entries(order, side, entries, field)
    elif decomposition is not None:
        tensor = decomposition.tensor()
    else:
        raise DocumentError("Tensor document needs 'entries' or 'decomposition'.")
    return tensor, decomposition


def tensor_to_document(tensor: Tensor, decomposition: Optional[RankDecomposition] = None) -> dict[str, Any]:
    field = tensor.field
    document: dict[str, Any] = {
        "field": str(field),
        "order": tensor.order,
        "side": tensor.side,
        "entries": [[*indices, field.to_str(value)] for indices, value in tensor.entries()],
    }
    if decomposition is not None:
        document["decomposition"] = [
            [[field.to_str(v) for v in vector] for vector in term] for term in decomposition.terms
        ]
    return document
