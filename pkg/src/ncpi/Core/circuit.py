# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""非交换算术电路

`Circuit` 是由变量、常数叶节点与加法、（有序）乘法门组成的有向无环图，门按拓扑序编号，
子节点编号总小于父节点。`CircuitBuilder` 用于逐门构造电路，叶节点自动去重。

本模块还实现电路到多项式的展开、公式展开意义下的相等判定、逐元矩阵降阶（lowering）、
矩阵求值，以及电路文档的读写。
"""

__all__ = [
    "Gate",
    "Circuit",
    "CircuitBuilder",
    "LoweredFamily",
    "from_poly",
    "parse_circuit",
    "print_circuit",
    "circuit_to_document",
    "circuit_from_document",
    "expand",
    "formula_equal",
    "gate_isomorphic",
    "matrix_expand",
    "lowering_size_bound",
    "eval_on_matrices",
    "eval_scalar",
    "as_matrix",
    "circuit_degree",
    "substitute_circuit",
    "standard_circuit",
]

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Any, NamedTuple, Optional, Union

import yaml
from sympy.polys.matrices import DomainMatrix

from ..Constants import GateOp, Limits, VarKind
from ..Utilities.documents import dump_yaml, load_yaml_text
from ..Utilities.expr_parser import ExpressionSyntaxError, Node, parse_expression
from ..Utilities.linalg import matrix_from_rows, scalar_matrix
from .errors import (
    CapExceededError,
    CircuitStructureError,
    DocumentError,
    FieldMismatchError,
    ParseError,
    PreconditionError,
)
from .fields import QQ_FIELD, Field, parse_field
from .freealg import NcPoly, VarRef, entry, parse_var, x, z

logger = logging.getLogger(__name__)


class Gate(NamedTuple):
    """电路中的一个门

    var 门使用 var 字段，const 门使用 value 字段，add / mul 门使用 left、right 字段。
    """

    op: GateOp
    var: Optional[VarRef] = None
    value: Any = None
    left: Optional[int] = None
    right: Optional[int] = None


class Circuit:
    """非交换算术电路，构造后不可变"""

    __slots__ = ("_gates", "_outputs", "_field")

    def __init__(self, gates: Sequence[Gate], outputs: Sequence[int], field: Field = QQ_FIELD):
        """
        :param gates: 按拓扑序排列的门，下标即门编号
        :param outputs: 输出门编号
        :param field: 常数所在的域
        :raise CircuitStructureError: 子节点编号不小于父节点，或输出编号不存在
        """

        self._gates = tuple(gates)
        self._outputs = tuple(outputs)
        self._field = field

        for gid, gate in enumerate(self._gates):
            if gate.op in (GateOp.add, GateOp.mul):
                for child in (gate.left, gate.right):
                    if child is None or not (0 <= child < gid):
                        raise CircuitStructureError(f"Gate {gid} refers to invalid child {child}.")
        for out in self._outputs:
            if not (0 <= out < len(self._gates)):
                raise CircuitStructureError(f"Unknown output gate id {out}.")

    @property
    def gates(self) -> tuple[Gate, ...]:
        return self._gates

    @property
    def outputs(self) -> tuple[int, ...]:
        return self._outputs

    @property
    def field(self) -> Field:
        return self._field

    @property
    def size(self) -> int:
        """电路规模：门的个数"""

        return len(self._gates)

    def __len__(self) -> int:
        return len(self._gates)

    def __repr__(self) -> str:
        return f"Circuit(size={self.size}, outputs={list(self._outputs)}, field={self._field})"

    def output(self, index: int = 0) -> int:
        try:
            return self._outputs[index]
        except IndexError:
            raise PreconditionError(f"Circuit has no output #{index}.") from None

    def reachable(self, roots: Optional[Sequence[int]] = None) -> list[int]:
        """从 roots（默认为全部输出）可达的门，按编号升序"""

        roots = self._outputs if roots is None else roots
        seen: set[int] = set()
        stack = list(roots)
        while stack:
            gid = stack.pop()
            if gid in seen:
                continue
            seen.add(gid)
            gate = self._gates[gid]
            if gate.op in (GateOp.add, GateOp.mul):
                stack.append(gate.left)
                stack.append(gate.right)
        return sorted(seen)

    def variables(self) -> tuple[VarRef, ...]:
        return tuple(sorted({g.var for g in self._gates if g.op is GateOp.var}))

    def with_outputs(self, outputs: Sequence[int]) -> "Circuit":
        """共享门表、仅替换输出的新电路"""

        return Circuit(self._gates, outputs, self._field)


class CircuitBuilder:
    """逐门构造电路；var / const 叶节点按值去重"""

    def __init__(self, field: Field = QQ_FIELD):
        self.field = field
        self._gates: list[Gate] = []
        self._leaves: dict[tuple, int] = {}

    def __len__(self) -> int:
        return len(self._gates)

    def _push(self, gate: Gate) -> int:
        self._gates.append(gate)
        return len(self._gates) - 1

    def var(self, v: VarRef) -> int:
        key = ("var", v)
        if key not in self._leaves:
            self._leaves[key] = self._push(Gate(GateOp.var, var=v))
        return self._leaves[key]

    def const(self, value) -> int:
        c = self.field(value)
        key = ("const", self.field.key(c))
        if key not in self._leaves:
            self._leaves[key] = self._push(Gate(GateOp.const, value=c))
        return self._leaves[key]

    def add(self, left: int, right: int) -> int:
        return self._push(Gate(GateOp.add, left=left, right=right))

    def mul(self, left: int, right: int) -> int:
        return self._push(Gate(GateOp.mul, left=left, right=right))

    def neg(self, operand: int) -> int:
        """-F 编码为 (-1)·F"""

        return self.mul(self.const(-1), operand)

    def sub(self, left: int, right: int) -> int:
        return self.add(left, self.neg(right))

    def mul_chain(self, factors: Sequence[int]) -> int:
        """从左到右依次相乘"""

        result = factors[0]
        for factor in factors[1:]:
            result = self.mul(result, factor)
        return result

    def balanced_sum(self, terms: Sequence[int]) -> int:
        """以平衡二叉树求和，空和为常数 0"""

        if not terms:
            return self.const(0)
        level = list(terms)
        while len(level) > 1:
            paired = [self.add(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
            if len(level) % 2:
                paired.append(level[-1])
            level = paired
        return level[0]

    def from_node(self, node: Node) -> int:
        """由语法树构造子电路，返回根门编号"""

        kind = node.kind
        if kind == "num":
            return self.const(self.field.from_rational(*node.args))
        if kind == "var":
            letter, indices = node.args
            if letter == "e":
                return self.var(entry(*indices))
            return self.var(x(indices[0]) if letter == "x" else z(indices[0]))
        if kind == "mul":
            return self.mul_chain([self.from_node(factor) for factor in node.args])
        if kind == "pow":
            base, exponent = node.args
            if exponent == 0:
                return self.const(1)
            root = self.from_node(base)
            return self.mul_chain([root] * exponent)
        if kind == "comm":
            args = [self.from_node(arg) for arg in node.args]
            result = args[0]
            for g in args[1:]:
                result = self.add(self.mul(result, g), self.neg(self.mul(g, result)))
            return result

        # sum
        total: Optional[int] = None
        for sign, term in node.args:
            gid = self.from_node(term)
            if sign < 0:
                gid = self.neg(gid)
            total = gid if total is None else self.add(total, gid)
        assert total is not None
        return total

    def from_poly(self, f: NcPoly) -> int:
        """按多项式规范文本的结构构造子电路

        结果与 `parse_circuit(format_poly(f))` 的门结构一致。
        """

        f.field.check_same(self.field)
        if f.is_zero():
            return self.const(0)
        field = self.field
        result: Optional[int] = None
        for word, c in f.items():
            negative = field.is_negative(c)
            magnitude = -c if negative else c
            factors = [self.var(v) for v in word]
            if not word or magnitude != field.one:
                factors.insert(0, self.const(magnitude))
            gid = self.mul_chain(factors)
            if negative:
                gid = self.neg(gid)
            result = gid if result is None else self.add(result, gid)
        assert result is not None
        return result

    def import_gate(self, circuit: Circuit, root: int, memo: Optional[dict[int, int]] = None) -> int:
        """将另一电路中以 root 为根的子电路复制进来，返回新的根编号"""

        circuit.field.check_same(self.field)
        memo = {} if memo is None else memo
        for gid in circuit.reachable([root]):
            if gid in memo:
                continue
            gate = circuit.gates[gid]
            if gate.op is GateOp.var:
                memo[gid] = self.var(gate.var)
            elif gate.op is GateOp.const:
                memo[gid] = self.const(gate.value)
            elif gate.op is GateOp.add:
                memo[gid] = self.add(memo[gate.left], memo[gate.right])
            else:
                memo[gid] = self.mul(memo[gate.left], memo[gate.right])
        return memo[root]

    def build(self, outputs: Sequence[int]) -> Circuit:
        return Circuit(self._gates, outputs, self.field)


def from_poly(f: NcPoly) -> Circuit:
    """由多项式构造单输出电路"""

    builder = CircuitBuilder(f.field)
    return builder.build([builder.from_poly(f)])


# 文档与文本形式


def circuit_to_document(circuit: Circuit) -> dict[str, Any]:
    """规范结构化文档：门按编号排序，编号从 0 连续"""

    field = circuit.field
    gates = []
    for gid, gate in enumerate(circuit.gates):
        if gate.op is GateOp.var:
            payload: Any = str(gate.var)
        elif gate.op is GateOp.const:
            payload = field.to_str(gate.value)
        else:
            payload = [gate.left, gate.right]
        gates.append({"id": gid, "op": gate.op.value, "payload": payload})
    return {"field": str(field), "gates": gates, "outputs": list(circuit.outputs)}


def _children(record: Mapping[str, Any], gid: Any) -> tuple[Any, Any]:
    payload = record.get("payload")
    if isinstance(payload, Mapping):
        return payload.get("left"), payload.get("right")
    if isinstance(payload, Sequence) and not isinstance(payload, str) and len(payload) == 2:
        return payload[0], payload[1]
    raise DocumentError(f"Gate {gid}: add/mul payload must be a pair of gate ids.")


def circuit_from_document(document: Mapping[str, Any], field: Optional[Field] = None) -> Circuit:
    """由结构化文档构造电路，门编号可以任意，按拓扑序重新编号

    :param document: {field, gates: [{id, op, payload}], outputs}
    :param field: 覆盖文档中声明的域
    :raise DocumentError: 文档格式错误
    :raise CircuitStructureError: 存在环或引用了不存在的门
    """

    if not isinstance(document, Mapping) or "gates" not in document:
        raise DocumentError("Circuit document must be a mapping with a 'gates' list.")
    if field is None:
        field = parse_field(document.get("field", "QQ"))

    records: dict[Any, Mapping[str, Any]] = {}
    for record in document["gates"]:
        if not isinstance(record, Mapping) or "id" not in record or "op" not in record:
            raise DocumentError(f"Malformed gate record {record!r}.")
        gid = record["id"]
        if gid in records:
            raise CircuitStructureError(f"Duplicate gate id {gid}.")
        try:
            GateOp(record["op"])
        except ValueError:
            raise DocumentError(f"Gate {gid}: unknown op {record['op']!r}.") from None
        records[gid] = record

    outputs = document.get("outputs")
    if outputs is None:
        outputs = [list(records)[-1]] if records else []
    for out in outputs:
        if out not in records:
            raise CircuitStructureError(f"Unknown output gate id {out}.")

    # 深度优先拓扑排序，顺带检测环
    order: list[Any] = []
    state: dict[Any, int] = {}  # 1: 正在访问, 2: 已完成
    for start in records:
        if state.get(start) == 2:
            continue
        stack: list[tuple[Any, bool]] = [(start, False)]
        while stack:
            gid, done = stack.pop()
            if done:
                state[gid] = 2
                order.append(gid)
                continue
            if state.get(gid) == 2:
                continue
            if state.get(gid) == 1:
                raise CircuitStructureError(f"Cycle through gate {gid}.")
            state[gid] = 1
            stack.append((gid, True))
            record = records[gid]
            if GateOp(record["op"]) in (GateOp.add, GateOp.mul):
                left, right = _children(record, gid)
                for child in (right, left):
                    if child not in records:
                        raise CircuitStructureError(f"Gate {gid} refers to unknown gate id {child}.")
                    if state.get(child) == 1:
                        raise CircuitStructureError(f"Cycle through gate {child}.")
                    if state.get(child) != 2:
                        stack.append((child, False))

    new_id = {gid: i for i, gid in enumerate(order)}
    gates: list[Gate] = []
    for gid in order:
        record = records[gid]
        op = GateOp(record["op"])
        payload = record.get("payload")
        if op is GateOp.var:
            gates.append(Gate(op, var=parse_var(str(payload))))
        elif op is GateOp.const:
            gates.append(Gate(op, value=field(str(payload) if not isinstance(payload, int) else payload)))
        else:
            left, right = _children(record, gid)
            gates.append(Gate(op, left=new_id[left], right=new_id[right]))
    return Circuit(gates, [new_id[out] for out in outputs], field)


def parse_circuit(source: Union[str, Mapping[str, Any]], field: Field = QQ_FIELD) -> Circuit:
    """解析电路：结构化文档（映射或 YAML/JSON 文本），或多项式公式文本

    公式文本按书写结构构造电路，不做展开，例如 "x1*x2 - x2*x1" 得到 7 个门。

    :raise ParseError: 公式语法错误（携带位置）
    :raise DocumentError: 文档格式错误
    :raise CircuitStructureError: 存在环或引用了不存在的门
    """

    if isinstance(source, Mapping):
        return circuit_from_document(source)
    text = source.strip()
    if ":" in text or text.startswith("{"):
        try:
            document = load_yaml_text(text)
        except yaml.YAMLError as e:
            raise DocumentError(f"Invalid circuit document: {e}") from e
        return circuit_from_document(document)

    try:
        node = parse_expression(source)
    except ExpressionSyntaxError as e:
        raise ParseError(str(e), e.position) from e
    builder = CircuitBuilder(field)
    return builder.build([builder.from_node(node)])


def print_circuit(circuit: Circuit) -> str:
    """输出规范的 YAML 文档文本"""

    return dump_yaml(circuit_to_document(circuit))


# 展开与比较


def expand(circuit: Circuit, monomial_cap: Optional[int] = None) -> list[NcPoly]:
    """自底向上展开每个输出门计算的多项式

    :param circuit: 电路
    :param monomial_cap: 任一门的单项式个数上限，默认 `Limits.EXPAND_MONOMIAL_CAP`
    :return: 与 outputs 一一对应的多项式
    :raise CapExceededError: 某个门的展开超过上限，where 为该门编号
    """

    cap = Limits.EXPAND_MONOMIAL_CAP if monomial_cap is None else monomial_cap
    if cap < 1:
        raise PreconditionError("monomial_cap must be at least 1.")
    field = circuit.field
    memo: dict[int, NcPoly] = {}
    for gid in circuit.reachable():
        gate = circuit.gates[gid]
        if gate.op is GateOp.var:
            poly = NcPoly.var(gate.var, field)
        elif gate.op is GateOp.const:
            poly = NcPoly.constant(gate.value, field)
        elif gate.op is GateOp.add:
            poly = memo[gate.left] + memo[gate.right]
        else:
            poly = memo[gate.left] * memo[gate.right]
        if len(poly) > cap:
            raise CapExceededError(
                f"Expansion of gate {gid} has {len(poly)} monomials, cap is {cap}.",
                where=gid,
                size=len(poly),
            )
        memo[gid] = poly
    return [memo[out] for out in circuit.outputs]


def _formula_classes(circuit: Circuit, root: int, table: dict[tuple, int]) -> int:
    """为 root 可达的门分配公式类编号；两个门公式展开相同当且仅当类编号相同"""

    field = circuit.field
    cls: dict[int, int] = {}
    for gid in circuit.reachable([root]):
        gate = circuit.gates[gid]
        if gate.op is GateOp.var:
            key: tuple = ("var", gate.var)
        elif gate.op is GateOp.const:
            key = ("const", field.key(gate.value))
        else:
            key = (gate.op.value, cls[gate.left], cls[gate.right])
        cls[gid] = table.setdefault(key, len(table))
    return cls[root]


def formula_equal(c1: Circuit, c2: Circuit, output1: int = 0, output2: int = 0) -> bool:
    """两个电路展开为公式后是否在语法上完全相同（不展开公式）

    对两个电路共用一张散列合并表自底向上编号，多项式时间完成。
    """

    if c1.field != c2.field:
        return False
    table: dict[tuple, int] = {}
    return _formula_classes(c1, c1.output(output1), table) == _formula_classes(c2, c2.output(output2), table)


def _canonical_form(circuit: Circuit) -> tuple:
    """从输出出发的后序遍历（先左后右）所得的规范序列"""

    field = circuit.field
    new_id: dict[int, int] = {}
    serial: list[tuple] = []
    for out in circuit.outputs:
        stack: list[tuple[int, bool]] = [(out, False)]
        while stack:
            gid, expanded = stack.pop()
            if gid in new_id:
                continue
            gate = circuit.gates[gid]
            if gate.op in (GateOp.add, GateOp.mul) and not expanded:
                stack.append((gid, True))
                stack.append((gate.right, False))
                stack.append((gate.left, False))
                continue
            if gate.op is GateOp.var:
                item: tuple = ("var", gate.var)
            elif gate.op is GateOp.const:
                item = ("const", field.key(gate.value))
            else:
                item = (gate.op.value, new_id[gate.left], new_id[gate.right])
            new_id[gid] = len(serial)
            serial.append(item)
    return str(field), tuple(serial), tuple(new_id[out] for out in circuit.outputs)


def gate_isomorphic(c1: Circuit, c2: Circuit) -> bool:
    """门表同构（保持子节点顺序与输出顺序），只比较输出可达部分"""

    return _canonical_form(c1) == _canonical_form(c2)


# 矩阵降阶


@dataclass(frozen=True)
class LoweredFamily:
    """逐元降阶结果：d² 个共享同一门表的电路，输出按行优先排列"""

    d: int
    circuit: Circuit

    def entry(self, i: int, j: int) -> int:
        """(i, j) 元（从 1 开始）对应的输出门编号"""

        if not (1 <= i <= self.d and 1 <= j <= self.d):
            raise PreconditionError(f"Entry ({i}, {j}) out of range for d={self.d}.")
        return self.circuit.outputs[(i - 1) * self.d + (j - 1)]

    def entry_circuit(self, i: int, j: int) -> Circuit:
        return self.circuit.with_outputs([self.entry(i, j)])

    @property
    def size(self) -> int:
        return self.circuit.size


def lowering_size_bound(circuit: Circuit, d: int) -> int:
    """降阶规模上界 c·d³·|C|

    var 门产生 d² 个门，const 门至多 2 个，add 门 d² 个，mul 门 d³ 个乘法加 d²(d-1) 个加法，
    每个门的代价都不超过 2d³，故 c = 2。
    """

    return Limits.LOWERING_SIZE_CONSTANT * d**3 * circuit.size


def matrix_expand(circuit: Circuit, d: int, output: int = 0) -> LoweredFamily:
    """逐元矩阵降阶：变量 x_i 换为 d×d 元变量矩阵，加法、乘法按矩阵运算展开

    :param circuit: 只含 X 变量的电路
    :param d: 矩阵阶数
    :param output: 要降阶的输出序号
    :raise PreconditionError: d < 1 或电路含非 X 变量
    """

    if d < 1:
        raise PreconditionError("Matrix dimension d must be at least 1.")
    root = circuit.output(output)
    builder = CircuitBuilder(circuit.field)
    grid: dict[int, list[list[int]]] = {}
    for gid in circuit.reachable([root]):
        gate = circuit.gates[gid]
        if gate.op is GateOp.var:
            if gate.var.kind is not VarKind.X:
                raise PreconditionError(f"Only X-variables can be lowered, found {gate.var}.")
            i = gate.var.index[0]
            grid[gid] = [[builder.var(entry(i, j, k)) for k in range(1, d + 1)] for j in range(1, d + 1)]
        elif gate.op is GateOp.const:
            diagonal = builder.const(gate.value)
            off = builder.const(0) if d > 1 else diagonal
            grid[gid] = [[diagonal if j == k else off for k in range(d)] for j in range(d)]
        elif gate.op is GateOp.add:
            a, b = grid[gate.left], grid[gate.right]
            grid[gid] = [[builder.add(a[j][k], b[j][k]) for k in range(d)] for j in range(d)]
        else:
            a, b = grid[gate.left], grid[gate.right]
            grid[gid] = [
                [builder.balanced_sum([builder.mul(a[j][t], b[t][k]) for t in range(d)]) for k in range(d)]
                for j in range(d)
            ]
    lowered = builder.build([gid for row in grid[root] for gid in row])
    logger.debug("Lowered circuit of size %d to size %d (d=%d).", circuit.size, lowered.size, d)
    return LoweredFamily(d, lowered)


# 求值


def as_matrix(value: Any, field: Field) -> DomainMatrix:
    """将嵌套列表或 DomainMatrix 转换为 field 上的方阵"""

    if isinstance(value, DomainMatrix):
        if value.domain != field.domain:
            raise FieldMismatchError(f"Matrix over {value.domain} where {field} is expected.")
        rows, cols = value.shape
    else:
        matrix = matrix_from_rows([[field(v) for v in row] for row in value], field.domain)
        rows, cols = matrix.shape
        value = matrix
    if rows != cols:
        raise PreconditionError(f"Matrix of shape {rows}x{cols} is not square.")
    return value


def _eval_field(circuit: Circuit, field: Optional[Field]) -> Field:
    target = circuit.field if field is None else field
    if circuit.field.is_prime_field and circuit.field != target:
        raise FieldMismatchError(f"Cannot evaluate a circuit over {circuit.field} in {target}.")
    return target


def eval_on_matrices(
    circuit: Circuit,
    assignment: Mapping[VarRef, Any],
    output: int = 0,
    dimension: Optional[int] = None,
    field: Optional[Field] = None,
) -> DomainMatrix:
    """在矩阵赋值下自底向上求值，精确运算

    :param circuit: 电路
    :param assignment: 变量到 d×d 矩阵（DomainMatrix 或嵌套列表）的映射
    :param output: 输出序号
    :param dimension: 矩阵阶数，缺省时由赋值推断
    :param field: 求值所在的域，缺省为电路的域；QQ 电路的常数可约化到素域
    :raise PreconditionError: 缺少变量或矩阵阶数不一致
    :raise FieldMismatchError: 矩阵或电路常数不在求值域中
    """

    field = _eval_field(circuit, field)
    K = field.domain
    root = circuit.output(output)
    matrices = {v: as_matrix(m, field) for v, m in assignment.items()}
    dims = {m.shape[0] for m in matrices.values()}
    if dimension is not None:
        dims.add(dimension)
    if len(dims) > 1:
        raise PreconditionError(f"Dimension mismatch among assigned matrices: {sorted(dims)}.")
    if not dims:
        raise PreconditionError("Matrix dimension cannot be inferred from an empty assignment.")
    d = dims.pop()

    memo: dict[int, DomainMatrix] = {}
    for gid in circuit.reachable([root]):
        gate = circuit.gates[gid]
        if gate.op is GateOp.var:
            if gate.var not in matrices:
                raise PreconditionError(f"No matrix assigned to variable {gate.var}.")
            memo[gid] = matrices[gate.var]
        elif gate.op is GateOp.const:
            memo[gid] = scalar_matrix(field.convert(gate.value), d, K)
        elif gate.op is GateOp.add:
            memo[gid] = memo[gate.left] + memo[gate.right]
        else:
            memo[gid] = memo[gate.left].matmul(memo[gate.right])
    return memo[root]


def eval_scalar(
    circuit: Circuit,
    values: Mapping[VarRef, Any],
    output: int = 0,
    field: Optional[Field] = None,
):
    """在标量赋值下求值（变量视为交换），返回域元素

    :raise PreconditionError: 缺少变量
    """

    field = _eval_field(circuit, field)
    root = circuit.output(output)
    memo: dict[int, Any] = {}
    for gid in circuit.reachable([root]):
        gate = circuit.gates[gid]
        if gate.op is GateOp.var:
            if gate.var not in values:
                raise PreconditionError(f"No value assigned to variable {gate.var}.")
            memo[gid] = field(values[gate.var])
        elif gate.op is GateOp.const:
            memo[gid] = field.convert(gate.value)
        elif gate.op is GateOp.add:
            memo[gid] = memo[gate.left] + memo[gate.right]
        else:
            memo[gid] = memo[gate.left] * memo[gate.right]
    return memo[root]


def circuit_degree(circuit: Circuit, output: int = 0) -> int:
    """形式次数（乘法门次数相加、加法门取最大），是所计算多项式次数的上界"""

    root = circuit.output(output)
    degree: dict[int, int] = {}
    for gid in circuit.reachable([root]):
        gate = circuit.gates[gid]
        if gate.op is GateOp.var:
            degree[gid] = 1
        elif gate.op is GateOp.const:
            degree[gid] = 0
        elif gate.op is GateOp.add:
            degree[gid] = max(degree[gate.left], degree[gate.right])
        else:
            degree[gid] = degree[gate.left] + degree[gate.right]
    return degree[root]


# 构造


def substitute_circuit(circuit: Circuit, images: Mapping[VarRef, Circuit], output: int = 0) -> Circuit:
    """结构代入：将变量门替换为对应电路的（第一个）输出子电路

    :raise FieldMismatchError: 像电路与原电路的域不同
    """

    field = circuit.field
    builder = CircuitBuilder(field)
    roots: dict[VarRef, int] = {}
    for v, image in images.items():
        if image.field != field:
            raise FieldMismatchError(f"Field mismatch: {field} vs {image.field}.")
        roots[v] = builder.import_gate(image, image.output(0))

    memo: dict[int, int] = {}
    root = circuit.output(output)
    for gid in circuit.reachable([root]):
        gate = circuit.gates[gid]
        if gate.op is GateOp.var:
            memo[gid] = roots[gate.var] if gate.var in roots else builder.var(gate.var)
        elif gate.op is GateOp.const:
            memo[gid] = builder.const(gate.value)
        elif gate.op is GateOp.add:
            memo[gid] = builder.add(memo[gate.left], memo[gate.right])
        else:
            memo[gid] = builder.mul(memo[gate.left], memo[gate.right])
    return builder.build([memo[root]])


def standard_circuit(n: int, variables: Optional[Sequence[VarRef]] = None, field: Field = QQ_FIELD) -> Circuit:
    """标准多项式 S_n 的子集递推电路，规模 O(n·2^n)

    S(T) = sum_k (-1)^k · v_{t_k} · S(T - {t_k})，t_0 < t_1 < ... 为 T 中的元素。
    """

    if n < 1:
        raise PreconditionError("Standard polynomial needs at least one argument.")
    variables = [x(i) for i in range(1, n + 1)] if variables is None else list(variables)
    if len(variables) != n:
        raise PreconditionError(f"Expected {n} variables, got {len(variables)}.")

    builder = CircuitBuilder(field)
    leaves = [builder.var(v) for v in variables]
    table: dict[int, int] = {1 << i: leaves[i] for i in range(n)}
    for mask in sorted(range(1, 1 << n), key=lambda m: bin(m).count("1")):
        if mask in table:
            continue
        members = [i for i in range(n) if mask >> i & 1]
        result: Optional[int] = None
        for k, i in enumerate(members):
            term = builder.mul(leaves[i], table[mask & ~(1 << i)])
            if k % 2:
                term = builder.neg(term)
            result = term if result is None else builder.add(result, term)
        assert result is not None
        table[mask] = result
    return builder.build([table[(1 << n) - 1]])
