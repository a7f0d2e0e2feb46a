# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""判定多项式（或电路）是否为 d 阶矩阵代数 Mat_d 的恒等式

提供三种方法：
    symbolic_check     以交换的元变量构成的一般矩阵代入，精确判定（有理数域上为权威结论）；
    matrix_unit_check  多重线性多项式在全部矩阵单位赋值上求值；
    random_check       在随机素域矩阵上求值，单侧错误，只会给出"很可能是恒等式"。

`al_suite` 对标准多项式 S_2d / S_(2d-1) 运行上述检查，生成报告。
"""

__all__ = [
    "IdentityVerdict",
    "ALReport",
    "symbolic_check",
    "matrix_unit_check",
    "sample_unit_check",
    "random_check",
    "check_identity",
    "al_suite",
    "evaluate_poly",
    "evaluate_poly_on_units",
    "unit_matrix",
    "random_assignment",
    "verify_witness",
]

import itertools
import logging
import warnings
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Callable, Optional, Union

import numpy as np
from sympy import Rational
from sympy.functions.combinatorial.numbers import stirling
from sympy.polys.matrices import DomainMatrix

from ..Constants import CheckMethod, GateOp, Limits, VerdictKind
from ..Utilities.linalg import matrix_is_zero, matrix_rows, scalar_matrix
from ..Utilities.parallel import ordered_map
from ..Utilities.random_tools import trial_rng, trial_rngs
from .circuit import Circuit, as_matrix, circuit_degree, eval_on_matrices, expand, standard_circuit
from .errors import CapExceededError, FieldMismatchError, PreconditionError
from .fields import Field, prime_field
from .freealg import NcPoly, VarRef, entry, is_multilinear, standard_poly, x

logger = logging.getLogger(__name__)

Target = Union[NcPoly, Circuit]


@dataclass
class IdentityVerdict:
    """恒等式判定结果

    not_identity 结论总是携带 witness：一组使多项式取非零值的矩阵赋值。
    """

    kind: VerdictKind
    method: CheckMethod
    d: int
    field: Field
    witness: Optional[dict[VarRef, DomainMatrix]] = None
    failure_bound: Optional[Rational] = None
    heuristic: bool = False
    stats: dict[str, Any] = dataclass_field(default_factory=dict)

    @property
    def is_identity(self) -> bool:
        return self.kind is VerdictKind.identity

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {
            "verdict": self.kind.value,
            "method": self.method.value,
            "d": self.d,
            "field": str(self.field),
        }
        if self.failure_bound is not None:
            result["failure_bound"] = str(self.failure_bound)
            result["failure_bound_float"] = float(self.failure_bound)
        if self.heuristic:
            result["heuristic"] = True
        if self.witness is not None:
            result["witness"] = {
                str(v): [[self.field.to_str(c) for c in row] for row in matrix_rows(m)]
                for v, m in sorted(self.witness.items())
            }
        result["stats"] = dict(self.stats)
        return result


def _check_dimension(d: int) -> None:
    if d < 1:
        raise PreconditionError("Matrix dimension d must be at least 1.")


# 求值


def _split_first(f: NcPoly) -> tuple[Any, dict[VarRef, NcPoly]]:
    """f = c0 + sum_v v·tail_v"""

    c0 = f.field.zero
    tails: dict[VarRef, dict] = {}
    for word, c in f.terms.items():
        if not word:
            c0 = c
        else:
            tails.setdefault(word[0], {})[word[1:]] = c
    return c0, {v: NcPoly(terms, f.field) for v, terms in sorted(tails.items())}


def _horner(
    f: NcPoly,
    scalar: Callable[[Any], Any],
    left_multiply: Callable[[VarRef, Any], Any],
    add: Callable[[Any, Any], Any],
) -> Any:
    """沿单项式前缀树求值：eval(f) = c0 + sum_v A_v · eval(tail_v)，相同后缀只计算一次"""

    memo: dict[tuple, Any] = {}

    def rec(g: NcPoly) -> Any:
        key = g.key()
        if key in memo:
            return memo[key]
        c0, tails = _split_first(g)
        value = scalar(c0)
        for v, tail in tails.items():
            value = add(value, left_multiply(v, rec(tail)))
        memo[key] = value
        return value

    return rec(f)


def evaluate_poly(
    f: NcPoly,
    assignment: Mapping[VarRef, Any],
    dimension: Optional[int] = None,
    field: Optional[Field] = None,
) -> DomainMatrix:
    """在矩阵赋值下对多项式求值

    :param f: 多项式；QQ 上的多项式可在素域中求值
    :param assignment: 变量到 d×d 矩阵的映射
    :param dimension: 矩阵阶数，缺省时由赋值推断
    :param field: 求值所在的域，缺省为 f 的域
    :raise PreconditionError: 缺少变量或矩阵阶数不一致
    """

    field = f.field if field is None else field
    if f.field.is_prime_field and f.field != field:
        raise FieldMismatchError(f"Cannot evaluate a polynomial over {f.field} in {field}.")
    matrices = {v: as_matrix(m, field) for v, m in assignment.items()}
    dims = {m.shape[0] for m in matrices.values()}
    if dimension is not None:
        dims.add(dimension)
    if len(dims) != 1:
        raise PreconditionError(f"Cannot determine a single matrix dimension from {sorted(dims)}.")
    d = dims.pop()
    missing = [str(v) for v in f.variables() if v not in matrices]
    if missing:
        raise PreconditionError(f"No matrix assigned to variables {missing}.")
    K = field.domain

    return _horner(
        f,
        lambda c: scalar_matrix(field.convert(c), d, K),
        lambda v, m: matrices[v].matmul(m),
        lambda a, b: a + b,
    )


def unit_matrix(a: int, b: int, d: int, field: Field) -> DomainMatrix:
    """矩阵单位 E_ab（下标从 1 开始）"""

    K = field.domain
    rows = [[K.one if (i, j) == (a - 1, b - 1) else K.zero for j in range(d)] for i in range(d)]
    return DomainMatrix(rows, (d, d), K)


def evaluate_poly_on_units(f: NcPoly, units: Mapping[VarRef, tuple[int, int]]) -> dict[tuple[int, int], Any]:
    """多重线性多项式在矩阵单位赋值下的值

    E_{a1 b1} E_{a2 b2} ... 非零当且仅当 b_i = a_(i+1)，故只需沿赋值构成的有向图枚举迹。

    :param f: 关于其变量多重线性的多项式
    :param units: 变量到矩阵单位下标 (a, b) 的映射
    :return: 非零位置到系数的映射
    """

    variables = f.variables()
    n = len(variables)
    outgoing: dict[int, list[VarRef]] = {}
    for v in variables:
        outgoing.setdefault(units[v][0], []).append(v)

    result: dict[tuple[int, int], Any] = {}
    used: set[VarRef] = set()
    word: list[VarRef] = []

    def walk(start: int, vertex: int) -> None:
        if len(word) == n:
            c = f.terms.get(tuple(word))
            if c:
                result[(start, vertex)] = result.get((start, vertex), f.field.zero) + c
            return
        for v in outgoing.get(vertex, ()):
            if v in used:
                continue
            used.add(v)
            word.append(v)
            walk(start, units[v][1])
            word.pop()
            used.discard(v)

    for start in sorted(outgoing):
        walk(start, start)
    return {pos: c for pos, c in result.items() if c}


def random_assignment(
    variables: tuple[VarRef, ...], d: int, field: Field, rng: np.random.Generator, bound: int = 3
) -> dict[VarRef, DomainMatrix]:
    """为每个变量生成随机 d×d 矩阵"""

    K = field.domain
    return {
        v: DomainMatrix([[field.random_element(rng, bound) for _ in range(d)] for _ in range(d)], (d, d), K)
        for v in variables
    }


# 符号检查


def _symbolic_estimate(f: NcPoly, d: int) -> int:
    """展开后单项式总数的上界：长度为 L 的单项式贡献 d^(L+1)"""

    return sum(d ** (len(word) + 1) for word in f.terms)


def symbolic_check(f: NcPoly, d: int, seed: Optional[int] = None) -> IdentityVerdict:
    """一般矩阵代入的符号检查

    每个变量 v（在变量列表中的位置为 i）代入 d×d 矩阵 (e_i_j_k)，元变量互相交换，
    d² 个矩阵元多项式全为零时 f 是恒等式。否则随机搜索使 f 非零的整数矩阵作为见证。

    :param f: 多项式
    :param d: 矩阵阶数
    :param seed: 搜索见证所用的随机种子
    :raise CapExceededError: 预计展开规模超过 `Limits.SYMBOLIC_MONOMIAL_CAP`，应改用 random_check
    """

    _check_dimension(d)
    estimate = _symbolic_estimate(f, d)
    if estimate > Limits.SYMBOLIC_MONOMIAL_CAP:
        raise CapExceededError(
            f"Symbolic expansion needs about {estimate} monomials (cap {Limits.SYMBOLIC_MONOMIAL_CAP}); "
            f"use random_check instead.",
            size=estimate,
        )

    field = f.field
    position = {v: i for i, v in enumerate(f.variables(), start=1)}
    zero = NcPoly.zero(field)

    def scalar(c: Any) -> list[list[NcPoly]]:
        diagonal = NcPoly.constant(c, field)
        return [[diagonal if j == k else zero for k in range(d)] for j in range(d)]

    def left_multiply(v: VarRef, m: list[list[NcPoly]]) -> list[list[NcPoly]]:
        i = position[v]
        result = []
        for j in range(1, d + 1):
            row = []
            for k in range(d):
                total = zero
                for t in range(1, d + 1):
                    if not m[t - 1][k].is_zero():
                        total = total + m[t - 1][k].times_variable(entry(i, j, t))
                row.append(total)
            result.append(row)
        return result

    def add(a: list[list[NcPoly]], b: list[list[NcPoly]]) -> list[list[NcPoly]]:
        return [[a[j][k] + b[j][k] for k in range(d)] for j in range(d)]

    grid = _horner(f, scalar, left_multiply, add)
    nonzero = [(j + 1, k + 1) for j in range(d) for k in range(d) if not grid[j][k].is_zero()]
    stats: dict[str, Any] = {
        "entries_checked": d * d,
        "monomials_estimate": estimate,
        "monomials_expanded": sum(len(grid[j][k]) for j in range(d) for k in range(d)),
    }
    logger.debug("Symbolic check on Mat_%d: %s", d, stats)

    if field.is_prime_field:
        warnings.warn(
            f"Symbolic check over {field} decides vanishing of the entry polynomials, "
            f"which may differ from vanishing as functions on Mat_{d}({field}).",
            RuntimeWarning,
            stacklevel=2,
        )
        stats["prime_field_caveat"] = True

    if not nonzero:
        return IdentityVerdict(VerdictKind.identity, CheckMethod.symbolic, d, field, stats=stats)

    stats["nonzero_entries"] = [list(pos) for pos in nonzero]
    seed = Limits.DEFAULT_SEED if seed is None else seed
    variables = f.variables()
    for attempt in range(64):
        assignment = random_assignment(variables, d, field, trial_rng(seed, attempt), bound=3 + attempt)
        value = evaluate_poly(f, assignment, dimension=d)
        if not matrix_is_zero(value):
            stats["witness_attempts"] = attempt + 1
            return IdentityVerdict(
                VerdictKind.not_identity, CheckMethod.symbolic, d, field, witness=assignment, stats=stats
            )

    warnings.warn(
        "Entry polynomials are nonzero but no nonvanishing matrix assignment was found.",
        RuntimeWarning,
        stacklevel=2,
    )
    stats["symbolic_nonzero"] = True
    return IdentityVerdict(VerdictKind.probable, CheckMethod.symbolic, d, field, heuristic=True, stats=stats)


# 矩阵单位检查


def _monotone_walks(n: int, d: int) -> Iterator[list[tuple[int, int]]]:
    """下标每步不变或加一的矩阵单位序列，按 (起点, 步长序列) 字典序"""

    for start in range(1, d + 1):
        for steps in itertools.product((0, 1), repeat=n):
            if start + sum(steps) > d:
                continue
            walk = []
            a = start
            for s in steps:
                walk.append((a, a + s))
                a += s
            yield walk


def _restricted_growth(length: int, d: int) -> Iterator[tuple[int, ...]]:
    """长度为 length、取值 1..d 的规范标号序列（每个新标号首次出现时恰为已用最大标号加一）"""

    def rec(prefix: list[int], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for label in range(1, min(top + 1, d) + 1):
            prefix.append(label)
            yield from rec(prefix, max(top, label))
            prefix.pop()

    yield from rec([], 0)


def _has_trail(edges: list[tuple[int, int]]) -> bool:
    """有向多重图是否存在经过每条边恰一次的迹"""

    balance: dict[int, int] = {}
    neighbours: dict[int, set[int]] = {}
    for a, b in edges:
        balance[a] = balance.get(a, 0) + 1
        balance[b] = balance.get(b, 0) - 1
        neighbours.setdefault(a, set()).add(b)
        neighbours.setdefault(b, set()).add(a)
    odd = sorted(v for v in balance.values() if v)
    if odd not in ([], [-1, 1]):
        return False
    vertices = list(neighbours)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        for w in neighbours[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def _unit_witness(
    f: NcPoly, variables: tuple[VarRef, ...], units: list[tuple[int, int]], d: int
) -> Optional[dict[VarRef, DomainMatrix]]:
    values = evaluate_poly_on_units(f, dict(zip(variables, units)))
    if not values:
        return None
    return {v: unit_matrix(a, b, d, f.field) for v, (a, b) in zip(variables, units)}


def matrix_unit_check(f: NcPoly, d: int) -> IdentityVerdict:
    """多重线性多项式的矩阵单位检查

    先尝试下标单调的矩阵单位序列（能快速找到标准多项式等的见证），再按下标置换等价类穷举全部赋值，
    穷举时用欧拉迹条件排除必然为零的赋值。

    :raise PreconditionError: f 不是多重线性多项式
    :raise CapExceededError: 需要穷举的赋值数超过 `Limits.UNIT_ASSIGNMENT_CAP`
    """

    _check_dimension(d)
    variables = f.variables()
    if not is_multilinear(f, variables):
        raise PreconditionError("Matrix-unit evaluation is only sound for multilinear polynomials.")
    field = f.field
    n = len(variables)
    stats: dict[str, Any] = {"walks_checked": 0, "assignments_checked": 0}

    if n == 0:
        stats["assignments_checked"] = 1
        if f.is_zero():
            return IdentityVerdict(VerdictKind.identity, CheckMethod.units, d, field, stats=stats)
        return IdentityVerdict(VerdictKind.not_identity, CheckMethod.units, d, field, witness={}, stats=stats)

    for walk in _monotone_walks(n, d):
        stats["walks_checked"] += 1
        witness = _unit_witness(f, variables, walk, d)
        if witness is not None:
            return IdentityVerdict(VerdictKind.not_identity, CheckMethod.units, d, field, witness=witness, stats=stats)

    total = sum(int(stirling(2 * n, k)) for k in range(1, min(d, 2 * n) + 1))
    if total > Limits.UNIT_ASSIGNMENT_CAP:
        raise CapExceededError(
            f"Matrix-unit check needs {total} assignments (cap {Limits.UNIT_ASSIGNMENT_CAP}).",
            size=total,
        )
    for labels in _restricted_growth(2 * n, d):
        stats["assignments_checked"] += 1
        units = [(labels[2 * i], labels[2 * i + 1]) for i in range(n)]
        if not _has_trail(units):
            continue
        witness = _unit_witness(f, variables, units, d)
        if witness is not None:
            return IdentityVerdict(VerdictKind.not_identity, CheckMethod.units, d, field, witness=witness, stats=stats)

    return IdentityVerdict(VerdictKind.identity, CheckMethod.units, d, field, stats=stats)


def sample_unit_check(f: NcPoly, d: int, samples: int, seed: int) -> IdentityVerdict:
    """矩阵单位赋值的部分检查：全部单调序列加 samples 个随机赋值

    不穷举，故没有见证时结论为 probable（不带失败概率上界）。单调序列数超过
    `Limits.UNIT_ASSIGNMENT_CAP` 时跳过该步，只做随机赋值。

    :param samples: 随机赋值个数，第 t 个只依赖于 (seed, t)
    :raise PreconditionError: f 不是多重线性多项式
    """

    _check_dimension(d)
    variables = f.variables()
    if not is_multilinear(f, variables):
        raise PreconditionError("Matrix-unit evaluation is only sound for multilinear polynomials.")
    n = len(variables)
    stats: dict[str, Any] = {"walks_checked": 0, "walks_skipped": False, "samples_checked": 0, "seed": seed}

    def found(units: list[tuple[int, int]]) -> Optional[IdentityVerdict]:
        witness = _unit_witness(f, variables, units, d)
        if witness is None:
            return None
        return IdentityVerdict(VerdictKind.not_identity, CheckMethod.units, d, f.field, witness=witness, stats=stats)

    if d * 2**n > Limits.UNIT_ASSIGNMENT_CAP:
        stats["walks_skipped"] = True
    else:
        for walk in _monotone_walks(n, d):
            stats["walks_checked"] += 1
            if (verdict := found(walk)) is not None:
                return verdict

    for rng in trial_rngs(seed, samples):
        stats["samples_checked"] += 1
        labels = [int(a) for a in rng.integers(1, d + 1, size=2 * n)]
        units = [(labels[2 * i], labels[2 * i + 1]) for i in range(n)]
        if n and not _has_trail(units):
            continue
        if (verdict := found(units)) is not None:
            return verdict
    return IdentityVerdict(VerdictKind.probable, CheckMethod.units, d, f.field, stats=stats)


# 随机检查


def _reduction_loses_terms(target: Target, field: Field) -> bool:
    """QQ 上的输入模 p 后是否有非零系数（或电路常数）变为零"""

    if target.field.is_prime_field:
        return False
    if isinstance(target, Circuit):
        values = [g.value for g in target.gates if g.op is GateOp.const]
    else:
        values = list(target.terms.values())
    return any(c and not field.convert(c) for c in values)


def random_check(
    target: Target,
    d: int,
    p: Optional[int] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
) -> IdentityVerdict:
    """在 GF(p) 上的随机矩阵处求值

    单次试验中每个矩阵元是次数不超过 deg 的多项式，非零多项式在均匀随机点为零的概率不超过 deg/p，
    故 T 次试验全为零时的失败概率上界为 (deg/p)^T。随机方法从不给出 identity 结论。

    :param target: 多项式或电路（电路使用形式次数）
    :param d: 矩阵阶数
    :param p: 素数模数，默认 `Limits.DEFAULT_PRIME`
    :param trials: 试验次数，默认 `Limits.DEFAULT_TRIALS`
    :param seed: 64 位种子，第 t 次试验只依赖于 (seed, t)
    :param threads: 并行线程数
    :raise PreconditionError: p 不是素数、trials < 1 或 d < 1
    """

    _check_dimension(d)
    p = Limits.DEFAULT_PRIME if p is None else p
    trials = Limits.DEFAULT_TRIALS if trials is None else trials
    seed = Limits.DEFAULT_SEED if seed is None else seed
    if trials < 1:
        raise PreconditionError("At least one trial is required.")
    field = prime_field(p)

    if isinstance(target, Circuit):
        circuit = target
        degree = circuit_degree(circuit)
        variables = circuit.variables()

        def evaluate(assignment: dict[VarRef, DomainMatrix]) -> DomainMatrix:
            return eval_on_matrices(circuit, assignment, dimension=d, field=field)

    else:
        poly = target.to_field(field)
        degree = poly.degree() or 0
        variables = poly.variables()

        def evaluate(assignment: dict[VarRef, DomainMatrix]) -> DomainMatrix:
            return evaluate_poly(poly, assignment, dimension=d, field=field)

    if _reduction_loses_terms(target, field):
        warnings.warn(
            f"Reducing the input mod {p} drops nonzero coefficients; the verdict is about the reduced input.",
            RuntimeWarning,
            stacklevel=2,
        )
        reduced = True
    else:
        reduced = False

    heuristic = reduced or p <= 2 * degree * d
    if p <= 2 * degree * d:
        warnings.warn(
            f"Prime p={p} is not above 2*deg*d={2 * degree * d}; the verdict is heuristic.",
            RuntimeWarning,
            stacklevel=2,
        )

    def run(rng: np.random.Generator) -> tuple[dict[VarRef, DomainMatrix], bool]:
        assignment = random_assignment(variables, d, field, rng)
        return assignment, not matrix_is_zero(evaluate(assignment))

    rngs = trial_rngs(seed, trials)
    stats: dict[str, Any] = {"seed": seed, "p": p, "degree_bound": degree}
    if reduced:
        stats["reduced_mod_p"] = True
    if threads and threads > 1:
        outcomes = ordered_map(run, rngs, threads)
    else:
        outcomes = []
        for rng in rngs:
            outcomes.append(run(rng))
            if outcomes[-1][1]:
                break

    for index, (assignment, nonzero) in enumerate(outcomes):
        if nonzero:
            stats["trials"] = index + 1
            return IdentityVerdict(
                VerdictKind.not_identity,
                CheckMethod.random,
                d,
                field,
                witness=assignment,
                heuristic=heuristic,
                stats=stats,
            )

    stats["trials"] = trials
    bound = Rational(min(degree, p), p) ** trials
    return IdentityVerdict(
        VerdictKind.probable,
        CheckMethod.random,
        d,
        field,
        failure_bound=bound,
        heuristic=heuristic,
        stats=stats,
    )


def check_identity(
    target: Target,
    d: int,
    method: Union[CheckMethod, str] = CheckMethod.symbolic,
    p: Optional[int] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
) -> IdentityVerdict:
    """按方法分派的统一入口；电路只支持随机方法，其余方法会先将电路展开"""

    method = CheckMethod(method)
    if method is CheckMethod.random:
        return random_check(target, d, p, trials, seed, threads)
    if isinstance(target, Circuit):
        target = expand(target)[0]
    if method is CheckMethod.symbolic:
        return symbolic_check(target, d, seed)
    return matrix_unit_check(target, d)


def verify_witness(target: Target, verdict: IdentityVerdict) -> bool:
    """重新计算见证处的取值，非零时返回 True"""

    if verdict.witness is None:
        return False
    if isinstance(target, Circuit):
        value = eval_on_matrices(target, verdict.witness, dimension=verdict.d, field=verdict.field)
    else:
        value = evaluate_poly(target, verdict.witness, dimension=verdict.d, field=verdict.field)
    return not matrix_is_zero(value)


# Amitsur-Levitzki 检查


@dataclass
class ALReport:
    """S_2d 是 Mat_d 的恒等式、S_(2d-1) 不是"""

    d: int
    even: IdentityVerdict
    odd: IdentityVerdict

    @property
    def passed(self) -> bool:
        even_ok = self.even.kind is VerdictKind.identity or (
            self.even.kind is VerdictKind.probable and not self.even.heuristic
        )
        return even_ok and self.odd.kind is VerdictKind.not_identity

    def to_dict(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "passed": self.passed,
            f"S{2 * self.d}": self.even.to_dict(),
            f"S{2 * self.d - 1}": self.odd.to_dict(),
        }


def al_suite(
    d: int,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
) -> ALReport:
    """对 1 <= d <= 4 验证 S_2d 是 Mat_d 的恒等式而 S_(2d-1) 不是

    d <= 3 时 S_2d 用符号检查。d = 4 时 S_8 先在子集递推电路上随机检查，再做矩阵单位部分检查
    （全部单调序列加 trials 个随机赋值），两者的统计都记在 even.stats 中；矩阵单位步骤找到见证时
    even 改为该见证。S_(2d-1) 用矩阵单位检查给出见证。

    :raise PreconditionError: d 不在 1..4 中
    """

    if not (1 <= d <= 4):
        raise PreconditionError(f"al_suite supports 1 <= d <= 4, got {d}.")
    if d <= 3:
        even = symbolic_check(standard_poly([x(i) for i in range(1, 2 * d + 1)], cap=2 * d), d, seed)
    else:
        even = random_check(standard_circuit(2 * d), d, Limits.DEFAULT_PRIME, trials, seed, threads)
        units = sample_unit_check(
            standard_poly([x(i) for i in range(1, 2 * d + 1)], cap=2 * d),
            d,
            Limits.DEFAULT_TRIALS if trials is None else trials,
            Limits.DEFAULT_SEED if seed is None else seed,
        )
        if units.kind is VerdictKind.not_identity:
            units.stats["random"] = dict(even.stats)
            even = units
        else:
            even.stats["units"] = dict(units.stats)
    odd = matrix_unit_check(standard_poly([x(i) for i in range(1, 2 * d)], cap=2 * d), d)
    return ALReport(d, even, odd)
