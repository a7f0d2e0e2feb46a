# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""生成证书与 T-理想成员判定

生成证书将多项式 f 写作 sum_i h_i · g_i · l_i，其中 g_i 是基元素的代入实例；
证书中互不相同（展开式不同）的非零实例个数是生成复杂度的一个上界。

本模块提供证书的校验与组合、有界次数的多重线性成员判定、交换子基下的精确复杂度，
以及线性化约简、转移见证与常数坍缩等构造性工具。
"""

__all__ = [
    "SubstitutionInstance",
    "Summand",
    "GenerationCertificate",
    "CertificateCheck",
    "MembershipResult",
    "CommutatorQ",
    "CommutatorPolynomial",
    "builtin_basis_element",
    "verify_certificate",
    "compose_certificates",
    "composition_bound",
    "multilinear_membership",
    "q_commutator_exact",
    "linear_reduce",
    "linear_reduce_certificate",
    "transfer_witness",
    "collapse_check",
    "certificate_from_document",
    "certificate_to_document",
    "composition_from_document",
    "membership_from_document",
]

import itertools
import logging
import re
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field as dataclass_field
from typing import Any, NamedTuple, Optional

from sympy.polys.matrices import DomainMatrix

from ..Constants import Grading, Limits, VarKind
from ..Utilities.linalg import solve_in_span
from .errors import CapExceededError, DocumentError, PreconditionError
from .fields import QQ_FIELD, Field, parse_field
from .freealg import (
    NcPoly,
    VarRef,
    Word,
    bracket_map,
    format_poly,
    gen_commutator,
    homogeneous_part,
    is_multilinear,
    multilinearize,
    parse_poly,
    parse_var,
    standard_poly,
    substitute,
    x,
)

logger = logging.getLogger(__name__)

_STANDARD_NAME_RE = re.compile(r"^S_?(\d+)$")


def builtin_basis_element(name: str, field: Field = QQ_FIELD) -> Optional[NcPoly]:
    """内置的基元素："commutator" 即 [x1,x2]，"S<n>" 即标准多项式 S_n，"hall" 即 [[x1,x2]^2,x3]"""

    if name == "commutator":
        return parse_poly("[x1,x2]", field)
    if name == "hall":
        return parse_poly("[[x1,x2]^2,x3]", field)
    match = _STANDARD_NAME_RE.match(name)
    if match:
        n = int(match.group(1))
        return standard_poly([x(i) for i in range(1, n + 1)], field)
    return None


class SubstitutionInstance:
    """基元素的一个代入实例，展开式在构造时计算并缓存

    两个实例相同当且仅当展开式相同。
    """

    __slots__ = ("basis_name", "element", "substitution", "expansion")

    def __init__(self, basis_name: str, element: NcPoly, substitution: Mapping[VarRef, NcPoly]):
        self.basis_name = basis_name
        self.element = element
        self.substitution: dict[VarRef, NcPoly] = dict(sorted(substitution.items()))
        self.expansion = substitute(element, self.substitution)

    def images(self) -> list[NcPoly]:
        """按基元素变量顺序排列的像"""

        return [self.substitution.get(v, NcPoly.var(v, self.element.field)) for v in self.element.variables()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubstitutionInstance):
            return NotImplemented
        return self.expansion == other.expansion

    def __hash__(self) -> int:
        return hash(self.expansion)

    def __repr__(self) -> str:
        sigma = ", ".join(f"{v}<-{format_poly(p)}" for v, p in self.substitution.items())
        return f"SubstitutionInstance({self.basis_name}[{sigma}])"


class Summand(NamedTuple):
    h: NcPoly
    instance: SubstitutionInstance
    ell: NcPoly


@dataclass
class GenerationCertificate:
    """f = sum_i h_i · g_i · l_i"""

    target: NcPoly
    summands: list[Summand] = dataclass_field(default_factory=list)

    @property
    def field(self) -> Field:
        return self.target.field

    def distinct_instances(self) -> list[SubstitutionInstance]:
        """展开式互不相同的非零实例，按首次出现的顺序"""

        seen: dict[NcPoly, SubstitutionInstance] = {}
        for summand in self.summands:
            expansion = summand.instance.expansion
            if not expansion.is_zero() and expansion not in seen:
                seen[expansion] = summand.instance
        return list(seen.values())

    @property
    def instance_count(self) -> int:
        return len(self.distinct_instances())

    def evaluate(self) -> NcPoly:
        total = NcPoly.zero(self.field)
        for h, instance, ell in self.summands:
            total = total + h * instance.expansion * ell
        return total


class CertificateCheck(NamedTuple):
    valid: bool
    instance_count: int
    residual: NcPoly


def verify_certificate(certificate: GenerationCertificate) -> CertificateCheck:
    """校验证书：求和结果与目标完全相同时有效，否则返回非零余项 target - sum

    :raise FieldMismatchError: 证书中多项式的域不一致
    """

    residual = certificate.target - certificate.evaluate()
    return CertificateCheck(residual.is_zero(), certificate.instance_count, residual)


# 证书组合


def composition_bound(outer: GenerationCertificate, inner: Mapping[str, GenerationCertificate]) -> tuple[int, int]:
    """(r, q)：所用内层证书的最大实例数与外层实例数，组合结果的实例数不超过 r·q"""

    used = {s.instance.basis_name for s in outer.summands}
    r = max((inner[name].instance_count for name in used if name in inner), default=0)
    return r, outer.instance_count


def compose_certificates(
    outer: GenerationCertificate, inner: Mapping[str, GenerationCertificate]
) -> GenerationCertificate:
    """基变换下的证书组合

    外层证书使用基 B1 的元素，inner 为每个 B1 元素（按名字）在基 B0 上的证书。
    代入是代数同态，故 sigma(h' g' l') = sigma(h') sigma(g') sigma(l')，无需重命名变量。
    展开式相同的外层实例共用同一个代入，保证实例数不超过 r·q。

    :raise PreconditionError: 缺少内层证书、内层证书目标与基元素不符、内层证书无效，或组合结果超出 r·q
    """

    for name in {s.instance.basis_name for s in outer.summands}:
        if name not in inner:
            raise PreconditionError(f"No inner certificate for basis element {name!r}.")

    representative: dict[NcPoly, SubstitutionInstance] = {}
    summands: list[Summand] = []
    for h, instance, ell in outer.summands:
        if instance.expansion.is_zero():
            continue
        inner_cert = inner[instance.basis_name]
        if inner_cert.target != instance.element:
            raise PreconditionError(
                f"Inner certificate for {instance.basis_name!r} does not certify the basis element."
            )
        if not verify_certificate(inner_cert).valid:
            raise PreconditionError(f"Inner certificate for {instance.basis_name!r} is invalid.")
        rep = representative.setdefault(instance.expansion, instance)
        sigma = rep.substitution
        for h_inner, inner_instance, ell_inner in inner_cert.summands:
            new_sigma = {
                v: substitute(image, sigma)
                for v, image in zip(inner_instance.element.variables(), inner_instance.images())
            }
            new_instance = SubstitutionInstance(inner_instance.basis_name, inner_instance.element, new_sigma)
            summands.append(Summand(h * substitute(h_inner, sigma), new_instance, substitute(ell_inner, sigma) * ell))

    composed = GenerationCertificate(outer.target, summands)
    r, q = composition_bound(outer, inner)
    if composed.instance_count > r * q:
        raise PreconditionError(
            f"Composed certificate uses {composed.instance_count} instances, above the bound r*q = {r}*{q}."
        )
    logger.debug("Composed certificate: %d instances, bound r*q = %d*%d.", composed.instance_count, r, q)
    return composed


# 多重线性成员判定


class MembershipResult(NamedTuple):
    member: bool
    certificate: Optional[GenerationCertificate]
    rank: int  # 生成集张成的子空间维数
    dimension: int  # 多重线性分量的维数 n!
    spanning: int  # 去重后的生成向量个数


def _normalized(poly: NcPoly) -> tuple[tuple, Any]:
    """(首项系数归一后的键, 首项系数)，用于按数乘去重"""

    lc = poly.leading_coefficient()
    return poly.scale(poly.field.inv(lc)).key(), lc


def _ordered_selections(pool: tuple[VarRef, ...], slots: int, allow_empty: Sequence[bool]) -> Iterator[tuple]:
    """把 pool 中互不相交的变量按顺序排成 slots 个单词（允许的槽位可为空词）"""

    def rec(index: int, remaining: tuple[VarRef, ...]) -> Iterator[tuple]:
        if index == slots:
            yield (), remaining
            return
        min_len = 0 if allow_empty[index] else 1
        for length in range(min_len, len(remaining) + 1):
            for chosen in itertools.permutations(remaining, length):
                rest = tuple(v for v in remaining if v not in chosen)
                for tail, left in rec(index + 1, rest):
                    yield (chosen,) + tail, left

    yield from rec(0, pool)


def _prepare_generators(generators: Sequence[NcPoly], field: Field) -> list[tuple[int, NcPoly]]:
    prepared = []
    for index, g in enumerate(generators):
        field.check_same(g.field)
        if g.is_zero():
            continue
        if is_multilinear(g, g.variables()):
            prepared.append((index, g))
        elif not field.is_prime_field:
            prepared.extend((index, component) for component in multilinearize(g))
        else:
            raise PreconditionError("Non-multilinear generators need characteristic 0 for linearisation.")
    return prepared


def multilinear_membership(
    f: NcPoly, generators: Sequence[NcPoly], var_set: Sequence[VarRef]
) -> MembershipResult:
    """f 是否属于 generators 生成的 T-理想的多重线性分量

    生成集由全部 u·g(q_1, ..., q_k)·v 组成，u、v、q_i 为单词，整体恰含 var_set 中每个变量一次；
    多重线性分量由单项式代入张成。按数乘去重后在单词基上精确求解线性方程组。
    非多重线性的生成元先完全线性化（特征 0）。

    :param f: 关于 var_set 多重线性的多项式
    :param generators: 生成元
    :param var_set: 变量集，至多 `Limits.MEMBERSHIP_VAR_CAP` 个
    :raise PreconditionError: f 不是多重线性或变量过多
    :raise CapExceededError: 生成集过大
    """

    variables = tuple(sorted(set(var_set)))
    n = len(variables)
    if n > Limits.MEMBERSHIP_VAR_CAP:
        raise PreconditionError(f"At most {Limits.MEMBERSHIP_VAR_CAP} variables are supported, got {n}.")
    if not f.is_zero() and not is_multilinear(f, variables):
        raise PreconditionError("Target must be multilinear over the given variables.")
    field = f.field
    dimension = 1
    for i in range(2, n + 1):
        dimension *= i
    if f.is_zero():
        return MembershipResult(True, GenerationCertificate(f, []), 0, dimension, 0)

    candidates: dict[tuple, tuple[SubstitutionInstance, Word, Word, Any, NcPoly]] = {}
    arrangements = 0
    for index, g in _prepare_generators(generators, field):
        slots = g.variables()
        if len(g.terms) and (g.degree() or 0) > n:
            continue
        allow_empty = [not substitute(g, {v: NcPoly.one(field)}).is_zero() for v in slots]
        name = f"g{index + 1}"
        instance_cache: dict[tuple, SubstitutionInstance] = {}
        for words, rest in _ordered_selections(variables, len(slots), allow_empty):
            if words not in instance_cache:
                sigma = {v: NcPoly.monomial(w, 1, field) for v, w in zip(slots, words)}
                instance_cache[words] = SubstitutionInstance(name, g, sigma)
            instance = instance_cache[words]
            if instance.expansion.is_zero():
                continue
            for perm in itertools.permutations(rest):
                for cut in range(len(perm) + 1):
                    arrangements += 1
                    if arrangements > Limits.MEMBERSHIP_ARRANGEMENT_CAP:
                        raise CapExceededError(
                            f"Membership spanning set exceeds {Limits.MEMBERSHIP_ARRANGEMENT_CAP} arrangements.",
                            size=arrangements,
                        )
                    u, v = perm[:cut], perm[cut:]
                    vector = NcPoly.monomial(u, 1, field) * instance.expansion * NcPoly.monomial(v, 1, field)
                    key, lc = _normalized(vector)
                    if key not in candidates:
                        candidates[key] = (instance, u, v, lc, vector)

    entries = list(candidates.values())
    logger.debug("Membership: %d arrangements, %d distinct spanning vectors.", arrangements, len(entries))
    solution = solve_in_span([entry[4].terms for entry in entries], f.terms, field.domain)
    if not solution.in_span:
        return MembershipResult(False, None, solution.rank, dimension, len(entries))

    assert solution.coefficients is not None
    summands = []
    for (instance, u, v, _, _), a in zip(entries, solution.coefficients):
        if a:
            summands.append(Summand(NcPoly.monomial(u, 1, field).scale(a), instance, NcPoly.monomial(v, 1, field)))
    return MembershipResult(True, GenerationCertificate(f, summands), solution.rank, dimension, len(entries))


# 交换子基下的精确复杂度


class CommutatorQ(NamedTuple):
    q: int
    rank: int
    certificate: GenerationCertificate


def q_commutator_exact(f: NcPoly) -> CommutatorQ:
    """基 {[x1,x2]} 下 f 的精确生成复杂度

    f 为交换子 [x_i, x_j] 的线性组合时，系数矩阵 A（A[i][j] 为 x_i x_j 的系数）反对称，
    k 个线性型交换子之和恰好给出秩不超过 2k 的反对称矩阵，故复杂度为 rank(A)/2。
    证书由反对称消去构造：取 a = A[i][j] != 0，u = A[:, i]/a，v = A[:, j]，
    减去 u v^T - v u^T 后第 i、j 行列全为零，秩恰好减 2。

    :raise PreconditionError: f 不是 2 次多重线性反对称多项式
    """

    field = f.field
    variables = f.variables()
    for word in f.terms:
        if len(word) != 2 or word[0] == word[1]:
            raise PreconditionError("Expected a multilinear polynomial of degree 2.")
    position = {v: i for i, v in enumerate(variables)}
    n = len(variables)
    A = [[field.zero] * n for _ in range(n)]
    for (a, b), c in f.terms.items():
        A[position[a]][position[b]] = c
    for i in range(n):
        for j in range(n):
            if A[i][j] != -A[j][i]:
                raise PreconditionError("Polynomial is not a combination of commutators.")

    rank = DomainMatrix(A, (n, n), field.domain).rank() if n else 0
    comm = builtin_basis_element("commutator", field)
    assert comm is not None

    def linear_form(vector: list) -> NcPoly:
        return NcPoly({(v,): c for v, c in zip(variables, vector)}, field)

    summands = []
    M = [row[:] for row in A]
    while True:
        pivot = next(((i, j) for i in range(n) for j in range(n) if M[i][j]), None)
        if pivot is None:
            break
        i, j = pivot
        a = M[i][j]
        u = [M[r][i] * field.inv(a) for r in range(n)]
        v = [M[r][j] for r in range(n)]
        M = [[M[r][s] - (u[r] * v[s] - v[r] * u[s]) for s in range(n)] for r in range(n)]
        instance = SubstitutionInstance("commutator", comm, {x(1): linear_form(u), x(2): linear_form(v)})
        summands.append(Summand(NcPoly.one(field), instance, NcPoly.one(field)))

    certificate = GenerationCertificate(f, summands)
    return CommutatorQ(rank // 2, rank, certificate)


# 线性化约简


def linear_reduce(instances: Sequence[SubstitutionInstance]) -> list[SubstitutionInstance]:
    """将 S_2d 实例的每个像替换为其一次齐次分量

    S_2d(P_1..P_2d) 的 2d 次分量等于 S_2d(P_1 的一次分量, ...)。若某个像的一次分量为零，
    该实例的 2d 次分量为零，实例被丢弃。
    """

    reduced = []
    for instance in instances:
        sigma = {}
        for v, image in zip(instance.element.variables(), instance.images()):
            linear = homogeneous_part(image, 1, Grading.total)
            if linear.is_zero():
                break
            sigma[v] = linear
        else:
            reduced.append(SubstitutionInstance(instance.basis_name, instance.element, sigma))
    return reduced


def linear_reduce_certificate(certificate: GenerationCertificate, degree: int) -> GenerationCertificate:
    """s-多项式证书的线性化：每项替换为 (h 的常数项, 约简实例, l 的常数项)

    S_2d 实例的展开式各项次数至少为 2d，故 h·g·l 的 2d 次分量为 h_0·S_2d(一次分量)·l_0。
    目标取 2d 次齐次分量；所得证书的实例数不超过原证书。
    """

    field = certificate.field
    summands = []
    for h, instance, ell in certificate.summands:
        h0, ell0 = h.constant_term(), ell.constant_term()
        if not h0 or not ell0:
            continue
        reduced = linear_reduce([instance])
        if not reduced:
            continue
        summands.append(Summand(NcPoly.constant(h0, field), reduced[0], NcPoly.constant(ell0, field)))
    target = homogeneous_part(certificate.target, degree, Grading.total)
    return GenerationCertificate(target, summands)


# 转移见证


def _has_z(poly: NcPoly) -> bool:
    return any(v.kind is VarKind.Z for v in poly.variables())


def transfer_witness(
    Fs: Sequence[NcPoly], Gs: Sequence[NcPoly], Ps: Sequence[NcPoly], j: int
) -> GenerationCertificate:
    """构造性转移：<sum_i F_i S_n(P | j <- [P_j]^1) G_i> 属于 S_n(P | j <- sum_i G_i F_i) 生成的理想

    对 [P_j]^1（P_j 的 Z 一次分量）的每一项 c·U z V，括号映射把单项式 F X U z V Y G 变为
    z V Y G F X U。(X, j, Y) 到 (Y, j, X) 的置换符号在 n 为偶数时恒为 -1，
    故证书的各项为 (-c·z·V, S_n(P | j <- sum G_i F_i), U)。

    :param Fs: 左因子 F_1..F_k，不含 Z 变量
    :param Gs: 右因子 G_1..G_k，不含 Z 变量
    :param Ps: 多项式向量 P_1..P_n，除 P_j 外不含 Z 变量
    :param j: 槽位，从 1 开始
    :raise PreconditionError: n 为奇数、k 不一致、槽位越界或含有不允许的 Z 变量
    """

    n = len(Ps)
    if n == 0 or n % 2:
        raise PreconditionError("transfer_witness needs an even number of polynomials.")
    if len(Fs) != len(Gs):
        raise PreconditionError("Fs and Gs must have the same length.")
    if not (1 <= j <= n):
        raise PreconditionError(f"Slot {j} out of range 1..{n}.")
    field = Ps[0].field
    for poly in [*Fs, *Gs, *(P for i, P in enumerate(Ps, start=1) if i != j)]:
        field.check_same(poly.field)
        if _has_z(poly):
            raise PreconditionError("Only the selected slot may contain Z-variables.")

    linear_part = homogeneous_part(Ps[j - 1], 1, Grading.z_degree)
    slots = [x(i) for i in range(1, n + 1)]
    element = standard_poly(slots, field)

    def with_slot(value: NcPoly) -> dict[VarRef, NcPoly]:
        return {v: (value if i == j else P) for i, (v, P) in enumerate(zip(slots, Ps), start=1)}

    W = NcPoly.zero(field)
    for F, G in zip(Fs, Gs):
        W = W + G * F
    inner = substitute(element, with_slot(linear_part))
    T = NcPoly.zero(field)
    for F, G in zip(Fs, Gs):
        T = T + F * inner * G
    target = bracket_map(T)

    instance = SubstitutionInstance(f"S{n}", element, with_slot(W))
    summands = []
    if not instance.expansion.is_zero():
        for word, c in linear_part.items():
            k = next(i for i, v in enumerate(word) if v.kind is VarKind.Z)
            U, V = word[:k], word[k + 1 :]
            h = NcPoly.monomial((word[k],) + V, 1, field).scale(-c)
            summands.append(Summand(h, instance, NcPoly.monomial(U, 1, field)))
    return GenerationCertificate(target, summands)


# 交换子多项式与坍缩


class CommutatorPolynomial:
    """广义交换子乘积的线性组合

    terms 中每项为 (系数, 交换子序列)，每个交换子为至少两个变量的序列，表示左嵌套交换子 [v1, v2, ...]。
    """

    def __init__(self, terms: Sequence[tuple[Any, Sequence[Sequence[VarRef]]]], field: Field = QQ_FIELD):
        self.field = field
        self.terms: list[tuple[Any, tuple[tuple[VarRef, ...], ...]]] = []
        for coeff, commutators in terms:
            blocks = tuple(tuple(block) for block in commutators)
            if not blocks or any(len(block) < 2 for block in blocks):
                raise PreconditionError("Each term needs at least one commutator of two or more variables.")
            self.terms.append((field(coeff), blocks))

    @property
    def poly(self) -> NcPoly:
        total = NcPoly.zero(self.field)
        for coeff, blocks in self.terms:
            product = NcPoly.one(self.field)
            for block in blocks:
                product = product * gen_commutator([NcPoly.var(v, self.field) for v in block])
            total = total + product.scale(coeff)
        return total

    def is_multilinear(self) -> bool:
        """每项中变量互不相同，且各项使用同一变量集"""

        var_sets = []
        for _, blocks in self.terms:
            flat = [v for block in blocks for v in block]
            if len(flat) != len(set(flat)):
                return False
            var_sets.append(frozenset(flat))
        return len(set(var_sets)) <= 1

    def variables(self) -> tuple[VarRef, ...]:
        return tuple(sorted({v for _, blocks in self.terms for block in blocks for v in block}))


def collapse_check(f: CommutatorPolynomial, var: VarRef, c: Any) -> bool:
    """多重线性交换子多项式中任一变量取常数后为零

    :raise PreconditionError: f 不是由 `CommutatorPolynomial` 构造的多重线性交换子多项式
    """

    if not isinstance(f, CommutatorPolynomial):
        raise PreconditionError("collapse_check needs a CommutatorPolynomial.")
    if not f.is_multilinear():
        raise PreconditionError("collapse_check needs a multilinear commutator polynomial.")
    return substitute(f.poly, {var: NcPoly.constant(c, f.field)}).is_zero()


# 文档


def _basis_table(document: Mapping[str, Any], field: Field) -> dict[str, NcPoly]:
    table = {}
    for name, text in (document.get("basis") or {}).items():
        table[str(name)] = parse_poly(str(text), field)
    return table


def _resolve_element(name: str, table: Mapping[str, NcPoly], field: Field) -> NcPoly:
    if name in table:
        return table[name]
    builtin = builtin_basis_element(name, field)
    if builtin is not None:
        return builtin
    return parse_poly(name, field)


def certificate_from_document(document: Mapping[str, Any], field: Optional[Field] = None) -> GenerationCertificate:
    """读取证书文档 {field, basis, target, summands: [{h, basis_element, substitution, ell}]}

    :raise DocumentError: 文档格式错误
    :raise ParseError: 多项式文本语法错误
    """

    if not isinstance(document, Mapping) or "target" not in document:
        raise DocumentError("Certificate document must be a mapping with a 'target'.")
    if field is None:
        field = parse_field(document.get("field", "QQ"))
    table = _basis_table(document, field)
    target = parse_poly(str(document["target"]), field)
    summands = []
    for record in document.get("summands") or []:
        if not isinstance(record, Mapping) or "basis_element" not in record:
            raise DocumentError(f"Malformed summand {record!r}.")
        name = str(record["basis_element"])
        element = _resolve_element(name, table, field)
        sigma = {
            parse_var(str(v)): parse_poly(str(image), field) for v, image in (record.get("substitution") or {}).items()
        }
        h = parse_poly(str(record.get("h", "1")), field)
        ell = parse_poly(str(record.get("ell", "1")), field)
        summands.append(Summand(h, SubstitutionInstance(name, element, sigma), ell))
    return GenerationCertificate(target, summands)


def certificate_to_document(certificate: GenerationCertificate) -> dict[str, Any]:
    basis: dict[str, str] = {}
    summands = []
    for h, instance, ell in certificate.summands:
        basis.setdefault(instance.basis_name, format_poly(instance.element))
        summands.append(
            {
                "h": format_poly(h),
                "basis_element": instance.basis_name,
                "substitution": {str(v): format_poly(p) for v, p in instance.substitution.items()},
                "ell": format_poly(ell),
            }
        )
    return {
        "field": str(certificate.field),
        "basis": basis,
        "target": format_poly(certificate.target),
        "summands": summands,
    }


def composition_from_document(
    document: Mapping[str, Any],
) -> tuple[GenerationCertificate, dict[str, GenerationCertificate]]:
    """读取组合文档 {outer: 证书, inner: {基元素名: 证书}}"""

    if not isinstance(document, Mapping) or "outer" not in document or "inner" not in document:
        raise DocumentError("Composition document needs 'outer' and 'inner'.")
    outer = certificate_from_document(document["outer"])
    inner = {str(name): certificate_from_document(doc) for name, doc in document["inner"].items()}
    return outer, inner


def membership_from_document(
    document: Mapping[str, Any],
) -> tuple[NcPoly, list[NcPoly], list[VarRef]]:
    """读取成员判定文档 {field, target, generators: [...], vars: n 或变量名列表}"""

    if not isinstance(document, Mapping) or "target" not in document or "generators" not in document:
        raise DocumentError("Membership document needs 'target' and 'generators'.")
    field = parse_field(document.get("field", "QQ"))
    target = parse_poly(str(document["target"]), field)
    generators = [_resolve_element(str(g), {}, field) for g in document["generators"]]
    declared = document.get("vars")
    if declared is None:
        variables = list(target.variables())
    elif isinstance(declared, int):
        variables = [x(i) for i in range(1, declared + 1)]
    else:
        variables = [parse_var(str(v)) for v in declared]
    return target, generators, variables
