# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""自由代数 F<X> 的精确运算核心

`VarRef` 为变量引用（X、Z 与矩阵元变量三类），`Word` 为变量序列（单项式），
`NcPoly` 为非交换多项式：单项式到非零域元素的有限映射，创建后不可变。

模块级函数实现多项式的环运算、代入、齐次分量、标准多项式、广义交换子、括号映射等操作。
"""

__all__ = [
    "VarRef",
    "Word",
    "NcPoly",
    "x",
    "z",
    "entry",
    "ring_op",
    "substitute",
    "homogeneous_part",
    "multihomogeneous_components",
    "standard_poly",
    "standard_of",
    "gen_commutator",
    "bracket_map",
    "combine",
    "is_multilinear",
    "multilinearize",
    "rename_variables",
    "parse_poly",
    "parse_var",
    "poly_from_node",
    "format_poly",
    "format_word",
]

import functools
import itertools
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Optional, Union

from ..Constants import Grading, Limits, VarKind
from ..Utilities.expr_parser import ExpressionSyntaxError, Node, parse_expression
from .errors import CapExceededError, FieldMismatchError, ParseError, PreconditionError
from .fields import QQ_FIELD, Field


@dataclass(frozen=True, order=True)
class VarRef:
    """变量引用

    X、Z 变量的 index 为 (i,)，矩阵元变量为 (i, j, k)，表示第 i 个变量对应矩阵的 (j, k) 元。
    全序为先按种类、再按 index 的字典序。
    """

    kind: VarKind
    index: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = 3 if self.kind is VarKind.ENTRY else 1
        if len(self.index) != expected or any(i < 1 for i in self.index):
            raise PreconditionError(f"Invalid index {self.index} for {self.kind.name} variable.")

    def __str__(self) -> str:
        if self.kind is VarKind.X:
            return f"x{self.index[0]}"
        if self.kind is VarKind.Z:
            return f"z{self.index[0]}"
        return "e" + "_".join(str(i) for i in self.index)


def x(i: int) -> VarRef:
    return VarRef(VarKind.X, (i,))


def z(i: int) -> VarRef:
    return VarRef(VarKind.Z, (i,))


def entry(i: int, j: int, k: int) -> VarRef:
    return VarRef(VarKind.ENTRY, (i, j, k))


Word = tuple[VarRef, ...]


def _word_key(word: Word) -> tuple[int, Word]:
    return len(word), word


def format_word(word: Word) -> str:
    return "*".join(str(v) for v in word)


class NcPoly:
    """非交换多项式，不可变

    内部以 dict[Word, 域元素] 存储，不保存零系数。
    """

    __slots__ = ("_terms", "_field", "_hash")

    def __init__(self, terms: Union[Mapping[Word, object], Iterable] = (), field: Field = QQ_FIELD):
        """
        :param terms: 单项式到系数的映射（或 (word, coeff) 序列），系数须为 field 中的元素
        :param field: 系数域
        """

        items = terms.items() if isinstance(terms, Mapping) else terms
        self._field = field
        self._terms: dict[Word, object] = {w: c for w, c in items if c}
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, terms: dict, field: Field) -> "NcPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._field = field
        poly._hash = None
        return poly

    # 构造函数

    @classmethod
    def zero(cls, field: Field = QQ_FIELD) -> "NcPoly":
        return cls._raw({}, field)

    @classmethod
    def constant(cls, value, field: Field = QQ_FIELD) -> "NcPoly":
        c = field(value)
        return cls._raw({(): c} if c else {}, field)

    @classmethod
    def one(cls, field: Field = QQ_FIELD) -> "NcPoly":
        return cls.constant(1, field)

    @classmethod
    def var(cls, v: VarRef, field: Field = QQ_FIELD) -> "NcPoly":
        return cls._raw({(v,): field.one}, field)

    @classmethod
    def monomial(cls, word: Word, coeff=1, field: Field = QQ_FIELD) -> "NcPoly":
        c = field(coeff)
        return cls._raw({tuple(word): c} if c else {}, field)

    # 基本属性

    @property
    def field(self) -> Field:
        return self._field

    @property
    def terms(self) -> Mapping[Word, object]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> list[tuple[Word, object]]:
        """按规范顺序（先次数、后字典序）排列的 (word, coeff) 列表"""

        return sorted(self._terms.items(), key=lambda item: _word_key(item[0]))

    def coefficient(self, word: Sequence[VarRef]):
        return self._terms.get(tuple(word), self._field.zero)

    def constant_term(self):
        return self.coefficient(())

    def leading_coefficient(self):
        """规范顺序下第一项的系数，零多项式返回 0"""

        if not self._terms:
            return self._field.zero
        return min(self._terms.items(), key=lambda item: _word_key(item[0]))[1]

    def degree(self) -> Optional[int]:
        """总次数，零多项式返回 None（报告中显示为 "undefined"）"""

        if not self._terms:
            return None
        return max(len(w) for w in self._terms)

    def variables(self) -> tuple[VarRef, ...]:
        return tuple(sorted({v for w in self._terms for v in w}))

    def key(self) -> tuple:
        """可哈希的规范键"""

        return tuple((w, self._field.key(c)) for w, c in self.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self._field == other._field and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._field, frozenset((w, self._field.key(c)) for w, c in self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"NcPoly({format_poly(self)!r}, field={self._field})"

    def __str__(self) -> str:
        return format_poly(self)

    # 运算

    def _coerce(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            if other._field != self._field:
                raise FieldMismatchError(f"Field mismatch: {self._field} vs {other._field}.")
            return other
        return NcPoly.constant(other, self._field)

    def __add__(self, other) -> "NcPoly":
        other = self._coerce(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            s = terms.get(w)
            s = c if s is None else s + c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return NcPoly._raw(terms, self._field)

    __radd__ = __add__

    def __neg__(self) -> "NcPoly":
        return NcPoly._raw({w: -c for w, c in self._terms.items()}, self._field)

    def __sub__(self, other) -> "NcPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "NcPoly":
        return self._coerce(other) - self

    def scale(self, value) -> "NcPoly":
        c = value if not isinstance(value, (int, str)) else self._field(value)
        if not c:
            return NcPoly.zero(self._field)
        return NcPoly._raw({w: a * c for w, a in self._terms.items()}, self._field)

    def __mul__(self, other) -> "NcPoly":
        if not isinstance(other, NcPoly):
            return self.scale(self._field(other))
        other = self._coerce(other)
        terms: dict[Word, object] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                s = terms.get(w)
                terms[w] = c1 * c2 if s is None else s + c1 * c2
        return NcPoly._raw({w: c for w, c in terms.items() if c}, self._field)

    def __rmul__(self, other) -> "NcPoly":
        return self.scale(self._field(other))

    def __pow__(self, exponent: int) -> "NcPoly":
        if exponent < 0:
            raise PreconditionError("Negative powers are not defined in the free algebra.")
        result = NcPoly.one(self._field)
        for _ in range(exponent):
            result = result * self
        return result

    def commutative_mul(self, other: "NcPoly") -> "NcPoly":
        """交换乘法：合并后的单项式按变量全序排序，用于表示交换多项式"""

        other = self._coerce(other)
        terms: dict[Word, object] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = tuple(sorted(w1 + w2))
                s = terms.get(w)
                terms[w] = c1 * c2 if s is None else s + c1 * c2
        return NcPoly._raw({w: c for w, c in terms.items() if c}, self._field)

    def times_variable(self, v: VarRef, coeff=None) -> "NcPoly":
        """交换意义下乘以单个变量（可带系数）"""

        terms: dict[Word, object] = {}
        for w, c in self._terms.items():
            merged = tuple(sorted(w + (v,)))
            terms[merged] = c if coeff is None else c * coeff
        return NcPoly._raw({w: c for w, c in terms.items() if c}, self._field)

    def to_field(self, field: Field) -> "NcPoly":
        """将系数转换到另一个域（QQ -> GF(p) 或同域）"""

        if field == self._field:
            return self
        return NcPoly({w: field.convert(c) for w, c in self._terms.items()}, field)


def _check_fields(polys: Iterable[NcPoly]) -> Field:
    fields = {p.field for p in polys}
    if len(fields) > 1:
        raise FieldMismatchError(f"Field mismatch: {sorted(str(f) for f in fields)}.")
    return fields.pop() if fields else QQ_FIELD


def ring_op(f: NcPoly, g: NcPoly, which: str) -> NcPoly:
    """环运算 add / sub / mul

    :raise FieldMismatchError: 两个多项式的域不同
    :raise PreconditionError: which 不是 add、sub、mul 之一
    """

    _check_fields((f, g))
    if which == "add":
        return f + g
    if which == "sub":
        return f - g
    if which == "mul":
        return f * g
    raise PreconditionError(f"Unknown ring operation {which!r}.")


def substitute(f: NcPoly, sigma: Mapping[VarRef, NcPoly]) -> NcPoly:
    """同时代入：将 f 中的变量 v 替换为 sigma[v]，未给出的变量保持不变

    :raise FieldMismatchError: 像多项式与 f 的域不同
    """

    field = f.field
    for image in sigma.values():
        if image.field != field:
            raise FieldMismatchError(f"Field mismatch: {field} vs {image.field}.")

    images: dict[VarRef, NcPoly] = {}
    for v in f.variables():
        images[v] = sigma[v] if v in sigma else NcPoly.var(v, field)

    @functools.lru_cache(maxsize=None)
    def word_image(word: Word) -> NcPoly:
        if not word:
            return NcPoly.one(field)
        if len(word) == 1:
            return images[word[0]]
        half = len(word) // 2
        return word_image(word[:half]) * word_image(word[half:])

    result = NcPoly.zero(field)
    for w, c in f.terms.items():
        result = result + word_image(w).scale(c)
    return result


def _z_count(word: Word) -> int:
    return sum(1 for v in word if v.kind is VarKind.Z)


def homogeneous_part(f: NcPoly, j: int, grading: Grading = Grading.total) -> NcPoly:
    """齐次分量：总次数为 j（total）或含 Z 变量个数为 j（z_degree）的单项式之和"""

    grading = Grading(grading)
    if grading is Grading.total:
        return NcPoly({w: c for w, c in f.terms.items() if len(w) == j}, f.field)
    return NcPoly({w: c for w, c in f.terms.items() if _z_count(w) == j}, f.field)


def multihomogeneous_components(f: NcPoly) -> list[NcPoly]:
    """按每个变量的次数分解为多重齐次分量，按规范顺序返回"""

    buckets: dict[tuple, dict[Word, object]] = {}
    for w, c in f.terms.items():
        profile = tuple(sorted((v, w.count(v)) for v in set(w)))
        buckets.setdefault(profile, {})[w] = c
    return [NcPoly(terms, f.field) for _, terms in sorted(buckets.items(), key=lambda item: item[0])]


def _check_standard_cap(n: int, cap: Optional[int]) -> None:
    limit = Limits.STANDARD_POLY_CAP if cap is None else cap
    if n < 1:
        raise PreconditionError("Standard polynomial needs at least one argument.")
    if n > limit:
        raise CapExceededError(
            f"Standard polynomial S_{n} exceeds the cap n <= {limit}.", size=n
        )


def standard_poly(variables: Sequence[VarRef], field: Field = QQ_FIELD, cap: Optional[int] = None) -> NcPoly:
    """标准多项式 S_n(v_1, ..., v_n) = sum_sigma sgn(sigma) v_sigma(1) ... v_sigma(n)

    :param variables: 变量列表，长度即 n
    :param field: 系数域
    :param cap: n 的上限，默认 `Limits.STANDARD_POLY_CAP`
    :raise CapExceededError: n 超过上限
    """

    n = len(variables)
    _check_standard_cap(n, cap)
    terms: dict[Word, object] = {}
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        word = tuple(variables[i] for i in perm)
        c = field.one if inversions % 2 == 0 else -field.one
        s = terms.get(word)
        terms[word] = c if s is None else s + c
    return NcPoly(terms, field)


def standard_of(args: Sequence[NcPoly], cap: Optional[int] = None) -> NcPoly:
    """以多项式为参数的标准多项式 S_n(P_1, ..., P_n)

    使用展开式 S_n(P_1..P_n) = sum_i (-1)^(i-1) P_i S_{n-1}(其余参数)，按参数子集记忆化。
    """

    n = len(args)
    _check_standard_cap(n, cap)
    field = _check_fields(args)

    @functools.lru_cache(maxsize=None)
    def rec(indices: tuple[int, ...]) -> NcPoly:
        if not indices:
            return NcPoly.one(field)
        total = NcPoly.zero(field)
        for pos, i in enumerate(indices):
            rest = indices[:pos] + indices[pos + 1 :]
            part = args[i] * rec(rest)
            total = total + part if pos % 2 == 0 else total - part
        return total

    return rec(tuple(range(n)))


def gen_commutator(args: Sequence[NcPoly]) -> NcPoly:
    """左嵌套的广义交换子 [[f_1, f_2], ..., f_n]

    :raise PreconditionError: 参数少于两个
    """

    if len(args) < 2:
        raise PreconditionError("A commutator needs at least two arguments.")
    _check_fields(args)
    result = args[0]
    for g in args[1:]:
        result = result * g - g * result
    return result


def bracket_map(f: NcPoly) -> NcPoly:
    """括号映射 <.>：线性映射，M_1 z M_2 -> z M_2 M_1，Z 次数不为 1 的单项式映射为 0"""

    terms: dict[Word, object] = {}
    for w, c in f.terms.items():
        positions = [i for i, v in enumerate(w) if v.kind is VarKind.Z]
        if len(positions) != 1:
            continue
        i = positions[0]
        image = (w[i],) + w[i + 1 :] + w[:i]
        s = terms.get(image)
        terms[image] = c if s is None else s + c
    return NcPoly(terms, f.field)


def combine(polys: Sequence[NcPoly]) -> NcPoly:
    """合并为单个多项式 sum_i z_i P_i，z_i 为新的 Z 变量

    :raise PreconditionError: 输入中已含 Z 变量
    """

    field = _check_fields(polys)
    result = NcPoly.zero(field)
    for i, p in enumerate(polys, start=1):
        if any(v.kind is VarKind.Z for v in p.variables()):
            raise PreconditionError("Inputs of combine must not contain Z-variables.")
        result = result + NcPoly.var(z(i), field) * p
    return result


def is_multilinear(f: NcPoly, variables: Iterable[VarRef]) -> bool:
    """是否关于给定变量集多重线性：每个单项式恰含每个变量一次，且不含其他变量"""

    target = sorted(set(variables))
    return all(sorted(w) == target for w in f.terms)


def multilinearize(f: NcPoly, fresh_start: Optional[int] = None) -> list[NcPoly]:
    """完全线性化（特征 0）

    先分解为多重齐次分量；对每个分量，将次数为 k 的变量替换为 k 个新变量之和，
    取关于新变量多重线性的部分。所得多项式生成的 T-理想与原多项式相同。

    :param f: 只含 X 变量的多项式
    :param fresh_start: 新变量编号的起点，默认从 1 开始重新编号
    :return: 多重线性多项式列表（变量为 x_start, x_start+1, ...）
    """

    if f.field.is_prime_field:
        raise PreconditionError("Full linearisation needs characteristic 0.")
    start = 1 if fresh_start is None else fresh_start
    results = []
    for component in multihomogeneous_components(f):
        if component.is_zero() or component.degree() == 0:
            continue
        word = next(iter(component.terms))
        profile = sorted((v, word.count(v)) for v in set(word))
        sigma: dict[VarRef, NcPoly] = {}
        fresh: list[VarRef] = []
        index = start
        for v, k in profile:
            group = [x(index + t) for t in range(k)]
            index += k
            fresh.extend(group)
            sigma[v] = sum((NcPoly.var(u, f.field) for u in group[1:]), NcPoly.var(group[0], f.field))
        expanded = substitute(component, sigma)
        linear = NcPoly(
            {w: c for w, c in expanded.terms.items() if sorted(w) == sorted(fresh)},
            f.field,
        )
        if not linear.is_zero():
            results.append(linear)
    return results


def rename_variables(f: NcPoly, mapping: Mapping[VarRef, VarRef]) -> NcPoly:
    """变量重命名（单射映射下为同构）"""

    terms: dict[Word, object] = {}
    for w, c in f.terms.items():
        image = tuple(mapping.get(v, v) for v in w)
        s = terms.get(image)
        terms[image] = c if s is None else s + c
    return NcPoly(terms, f.field)


# 文本形式


def _node_var(node: Node) -> VarRef:
    letter, indices = node.args
    if letter == "x":
        return x(indices[0])
    if letter == "z":
        return z(indices[0])
    return entry(*indices)


def poly_from_node(node: Node, field: Field) -> NcPoly:
    """将语法树展开为多项式"""

    kind = node.kind
    if kind == "num":
        return NcPoly.constant(field.from_rational(*node.args), field)
    if kind == "var":
        return NcPoly.var(_node_var(node), field)
    if kind == "mul":
        result = poly_from_node(node.args[0], field)
        for factor in node.args[1:]:
            result = result * poly_from_node(factor, field)
        return result
    if kind == "pow":
        return poly_from_node(node.args[0], field) ** node.args[1]
    if kind == "comm":
        return gen_commutator([poly_from_node(arg, field) for arg in node.args])
    result = NcPoly.zero(field)
    for sign, term in node.args:
        part = poly_from_node(term, field)
        result = result + part if sign > 0 else result - part
    return result


def parse_poly(text: str, field: Field = QQ_FIELD) -> NcPoly:
    """解析多项式文本

    :raise ParseError: 语法错误（携带位置）
    """

    try:
        node = parse_expression(text)
    except ExpressionSyntaxError as e:
        raise ParseError(str(e), e.position) from e
    return poly_from_node(node, field)


def format_poly(f: NcPoly) -> str:
    """规范文本形式：单项式按先次数后字典序排列，可被 `parse_poly` 读回"""

    if f.is_zero():
        return "0"
    field = f.field
    pieces: list[str] = []
    for w, c in f.items():
        negative = field.is_negative(c)
        magnitude = -c if negative else c
        coeff = field.to_str(magnitude)
        if not w:
            body = coeff
        elif coeff == "1":
            body = format_word(w)
        else:
            body = f"{coeff}*{format_word(w)}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def parse_var(text: str) -> VarRef:
    """解析单个变量名，如 "x3"、"z1"、"e1_2_2"

    :raise ParseError: 文本不是单个变量
    """

    try:
        node = parse_expression(text)
    except ExpressionSyntaxError as e:
        raise ParseError(str(e), e.position) from e
    if node.kind != "var":
        raise ParseError(f"Expected a single variable, got {text!r}", 0)
    return _node_var(node)
