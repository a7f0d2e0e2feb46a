# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""代数证明系统的证明检查

支持三个变体：
    pc      ：交换多项式演算，公理含乘法交换律与左分配律；
    pmatd   ：矩阵恒等式证明系统，去掉乘法交换律，加入右分配律以及基公理 H = 0；
    pcbool  ：GF(2) 上的交换演算加布尔公理 x·x + x = 0。

证明由若干行 F = G 组成，每行由一条公理或一条推理规则（引用之前的行）证明。
整个证明共用一张门表，结构比较在公式层面进行（展开为公式后语法相同即视为同一项）。
"""

__all__ = [
    "SystemSpec",
    "AxiomInstance",
    "RuleApplication",
    "ProofLine",
    "ProofScript",
    "ProofReport",
    "SpotcheckReport",
    "LineCount",
    "DRENSKY2",
    "make_system",
    "system_from_document",
    "proof_from_document",
    "check_proof",
    "check_proofs",
    "soundness_spotcheck",
    "count_lines",
]

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field as dataclass_field
from typing import Any, NamedTuple, Optional, Union

from ..Constants import AxiomKind, GateOp, Limits, RuleKind, SystemVariant
from ..Utilities.linalg import matrix_is_zero
from ..Utilities.parallel import ordered_map
from ..Utilities.random_tools import trial_rng
from .circuit import (
    Circuit,
    CircuitBuilder,
    circuit_from_document,
    eval_on_matrices,
    eval_scalar,
    formula_equal,
    gate_isomorphic,
    parse_circuit,
    substitute_circuit,
)
from .errors import DocumentError, FieldMismatchError, ParseError, PreconditionError
from .fields import Field, QQ_FIELD, parse_field, prime_field
from .freealg import VarRef, parse_var
from .ideals import GenerationCertificate
from .matcheck import random_assignment

logger = logging.getLogger(__name__)

_S4_TEXT = (
    "x1*x2*x3*x4 - x1*x2*x4*x3 - x1*x3*x2*x4 + x1*x3*x4*x2 + x1*x4*x2*x3 - x1*x4*x3*x2"
    " - x2*x1*x3*x4 + x2*x1*x4*x3 + x2*x3*x1*x4 - x2*x3*x4*x1 - x2*x4*x1*x3 + x2*x4*x3*x1"
    " + x3*x1*x2*x4 - x3*x1*x4*x2 - x3*x2*x1*x4 + x3*x2*x4*x1 + x3*x4*x1*x2 - x3*x4*x2*x1"
    " - x4*x1*x2*x3 + x4*x1*x3*x2 + x4*x2*x1*x3 - x4*x2*x3*x1 - x4*x3*x1*x2 + x4*x3*x2*x1"
)

# 2×2 矩阵恒等式的 T-理想的一组基
DRENSKY2: dict[str, str] = {"S4": _S4_TEXT, "hall": "[[x1,x2]^2,x3]"}

_COMMON_AXIOMS = frozenset(
    {
        AxiomKind.identity,
        AxiomKind.addition_commutativity,
        AxiomKind.associativity_add,
        AxiomKind.associativity_mul,
        AxiomKind.distributivity_left,
        AxiomKind.zero_add,
        AxiomKind.zero_mul,
        AxiomKind.unit_mul,
        AxiomKind.field_identity,
        AxiomKind.circuit,
    }
)

_VARIANT_AXIOMS = {
    SystemVariant.pc: _COMMON_AXIOMS | {AxiomKind.product_commutativity},
    SystemVariant.pmatd: _COMMON_AXIOMS | {AxiomKind.distributivity_right, AxiomKind.basis},
    SystemVariant.pcbool: _COMMON_AXIOMS | {AxiomKind.product_commutativity, AxiomKind.boolean},
}


@dataclass(frozen=True)
class SystemSpec:
    """证明系统的配置

    basis 为基元素名称到公式文本的映射，仅 pmatd 使用。
    """

    variant: SystemVariant
    field: Field = QQ_FIELD
    d: Optional[int] = None
    basis: Mapping[str, str] = dataclass_field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.variant is SystemVariant.pcbool and self.field != prime_field(2):
            raise PreconditionError(f"PC over GF(2) with Boolean axioms cannot use field {self.field}.")
        if self.variant is SystemVariant.pmatd:
            if self.d is None or self.d < 1:
                raise PreconditionError("P_Mat_d needs a matrix dimension d >= 1.")
            if not self.basis:
                raise PreconditionError("P_Mat_d needs a nonempty basis.")
        elif self.basis:
            raise PreconditionError(f"System {self.variant.value} takes no basis axioms.")

    @property
    def axioms(self) -> frozenset[AxiomKind]:
        return _VARIANT_AXIOMS[self.variant]

    @property
    def name(self) -> str:
        if self.variant is SystemVariant.pmatd:
            return f"pmat{self.d}"
        return self.variant.value

    def to_dict(self) -> dict[str, Any]:
        return {"variant": self.variant.value, "field": str(self.field), "d": self.d, "basis": sorted(self.basis)}


def make_system(
    variant: Union[str, SystemVariant],
    field: Optional[Field] = None,
    d: Optional[int] = None,
    basis: Union[str, Mapping[str, str], None] = None,
) -> SystemSpec:
    """构造证明系统

    :param variant: "pc"、"pcbool"、"pmatd"，或简写 "pmat2"（d = 2，基默认为 drensky2）
    :param field: 系数域；pcbool 缺省为 GF(2)，其余缺省为 QQ
    :param d: 矩阵阶数（仅 pmatd）
    :param basis: "drensky2" 或 {名称: 公式文本}
    :raise PreconditionError: 组合不合法
    """

    if isinstance(variant, str):
        text = variant.strip().lower()
        if text.startswith("pmat") and text[4:].isdigit():
            d = int(text[4:]) if d is None else d
            text = "pmatd"
        try:
            variant = SystemVariant(text)
        except ValueError:
            raise PreconditionError(f"Unknown proof system {text!r}.") from None

    if field is None:
        field = prime_field(2) if variant is SystemVariant.pcbool else QQ_FIELD
    if variant is SystemVariant.pmatd and basis is None and d == 2:
        basis = "drensky2"
    if isinstance(basis, str):
        if basis != "drensky2":
            raise PreconditionError(f"Unknown built-in basis {basis!r}.")
        basis = DRENSKY2
    return SystemSpec(variant, field, d, dict(basis or {}))


def system_from_document(document: Union[str, Mapping[str, Any]]) -> SystemSpec:
    """读取系统描述：变体名称，或 {variant, field, d, basis}"""

    if isinstance(document, str):
        return make_system(document)
    if not isinstance(document, Mapping) or "variant" not in document:
        raise DocumentError("System description needs a 'variant'.")
    field = parse_field(document["field"]) if "field" in document else None
    d = document.get("d")
    return make_system(document["variant"], field, None if d is None else int(d), document.get("basis"))


# 证明脚本


class AxiomInstance(NamedTuple):
    kind: AxiomKind
    parameters: Mapping[str, Any] = {}


class RuleApplication(NamedTuple):
    kind: RuleKind
    premises: tuple[int, ...]  # 从 1 开始的行号


class ProofLine(NamedTuple):
    lhs: int  # 共享门表中的门编号
    rhs: int
    justification: Union[AxiomInstance, RuleApplication]


@dataclass
class ProofScript:
    """证明脚本：系统、共享门表、证明行与可选的目标等式"""

    system: SystemSpec
    table: Circuit
    lines: list[ProofLine]
    goal: Optional[tuple[int, int]] = None
    gate_ids: Mapping[Any, int] = dataclass_field(default_factory=dict)  # 文档门编号 -> 门表编号

    def __post_init__(self) -> None:
        if not self.lines:
            raise PreconditionError("A proof needs at least one line.")
        if self.table.field != self.system.field:
            raise FieldMismatchError(f"Proof circuits are over {self.table.field}, system is over {self.system.field}.")

    def __len__(self) -> int:
        return len(self.lines)

    def subcircuit(self, gid: int) -> Circuit:
        return self.table.with_outputs([gid])


_RULE_ARITY = {
    RuleKind.symmetry: 1,
    RuleKind.transitivity: 2,
    RuleKind.add_compat: 2,
    RuleKind.mul_compat: 2,
}


def _justification_from_document(record: Any, number: int) -> Union[AxiomInstance, RuleApplication]:
    if not isinstance(record, Mapping):
        raise DocumentError(f"Line {number}: justification must be a mapping.")
    if "axiom" in record:
        try:
            kind = AxiomKind(record["axiom"])
        except ValueError:
            raise DocumentError(f"Line {number}: unknown axiom {record['axiom']!r}.") from None
        parameters = {key: value for key, value in record.items() if key != "axiom"}
        return AxiomInstance(kind, parameters)
    if "rule" in record:
        try:
            rule = RuleKind(record["rule"])
        except ValueError:
            raise DocumentError(f"Line {number}: unknown rule {record['rule']!r}.") from None
        premises = record.get("premises") or []
        if not isinstance(premises, Sequence) or isinstance(premises, str):
            raise DocumentError(f"Line {number}: premises must be a list of line numbers.")
        return RuleApplication(rule, tuple(int(p) for p in premises))
    raise DocumentError(f"Line {number}: justification needs an 'axiom' or a 'rule'.")


class _ScriptBuilder:
    """把公式文本与门表引用导入同一个 CircuitBuilder"""

    def __init__(self, field: Field, gates: Optional[Sequence[Any]]):
        self.field = field
        self.builder = CircuitBuilder(field)
        self.table_ids: dict[Any, int] = {}
        if gates:
            ids = [record["id"] for record in gates if isinstance(record, Mapping) and "id" in record]
            table = circuit_from_document({"field": str(field), "gates": gates, "outputs": ids}, field)
            memo: dict[int, int] = {}
            for doc_id, gid in zip(ids, table.outputs):
                self.table_ids[doc_id] = self.builder.import_gate(table, gid, memo)

    def term(self, value: Any, where: str) -> int:
        if isinstance(value, Mapping) and "gate" in value:
            value = value["gate"]
        if isinstance(value, int) and not isinstance(value, bool):
            if value not in self.table_ids:
                raise DocumentError(f"{where}: unknown gate id {value}.")
            return self.table_ids[value]
        if isinstance(value, str):
            try:
                circuit = parse_circuit(value, self.field)
            except ParseError as e:
                raise DocumentError(f"{where}: {e}") from e
            if circuit.field != self.field:
                raise FieldMismatchError(f"{where}: circuit over {circuit.field}, system over {self.field}.")
            return self.builder.import_gate(circuit, circuit.output(0))
        raise DocumentError(f"{where}: expected formula text or a gate id, got {value!r}.")


def proof_from_document(document: Mapping[str, Any], system: Optional[SystemSpec] = None) -> ProofScript:
    """读取证明文档

    {system, gates: [共享门表], lines: [{lhs, rhs, just}], goal: {lhs, rhs}}，
    lhs / rhs 为公式文本或共享门表中的门编号。

    :param system: 覆盖文档中声明的系统
    :raise DocumentError: 文档格式错误
    """

    if not isinstance(document, Mapping) or not isinstance(document.get("lines"), list):
        raise DocumentError("Proof document needs a 'lines' list.")
    if system is None:
        if "system" not in document:
            raise DocumentError("Proof document declares no system.")
        system = system_from_document(document["system"])

    script = _ScriptBuilder(system.field, document.get("gates"))
    lines = []
    for number, record in enumerate(document["lines"], start=1):
        if not isinstance(record, Mapping) or "lhs" not in record or "rhs" not in record:
            raise DocumentError(f"Line {number}: needs 'lhs' and 'rhs'.")
        lhs = script.term(record["lhs"], f"Line {number}")
        rhs = script.term(record["rhs"], f"Line {number}")
        lines.append(ProofLine(lhs, rhs, _justification_from_document(record.get("just"), number)))

    goal = None
    if document.get("goal") is not None:
        record = document["goal"]
        if not isinstance(record, Mapping) or "lhs" not in record or "rhs" not in record:
            raise DocumentError("Goal needs 'lhs' and 'rhs'.")
        goal = (script.term(record["lhs"], "Goal"), script.term(record["rhs"], "Goal"))
    return ProofScript(system, script.builder.build([]), lines, goal, dict(script.table_ids))


# 检查


class ProofReport(NamedTuple):
    accepted: bool
    line_count: int
    failed_line: Optional[int] = None  # 从 1 开始
    reason: Optional[str] = None  # 机器可读的原因代码
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return dict(self._asdict())


class _Mismatch(Exception):
    def __init__(self, reason: str, detail: str):
        super().__init__(detail)
        self.reason = reason
        self.detail = detail


def _formula_classes(circuit: Circuit) -> list[int]:
    """每个门展开为公式后的结构类编号，公式相同当且仅当编号相同"""

    table: dict[tuple, int] = {}
    classes: list[int] = []
    field = circuit.field
    for gate in circuit.gates:
        if gate.op is GateOp.var:
            key: tuple = ("var", gate.var)
        elif gate.op is GateOp.const:
            key = ("const", field.key(gate.value))
        else:
            key = (gate.op.value, classes[gate.left], classes[gate.right])
        classes.append(table.setdefault(key, len(table)))
    return classes


class _Checker:
    def __init__(self, script: ProofScript):
        self.script = script
        self.table = script.table
        self.gates = script.table.gates
        self.field = script.table.field
        self.classes = _formula_classes(script.table)

    def same(self, a: int, b: int) -> bool:
        return self.classes[a] == self.classes[b]

    def shape(self, gid: int, op: GateOp, what: str) -> tuple[int, int]:
        gate = self.gates[gid]
        if gate.op is not op:
            raise _Mismatch("axiom_mismatch", f"{what} must be a {op.value} gate, found {gate.op.value}.")
        assert gate.left is not None and gate.right is not None
        return gate.left, gate.right

    def expect_same(self, a: int, b: int, what: str) -> None:
        if not self.same(a, b):
            raise _Mismatch("axiom_mismatch", f"{what} do not match.")

    def is_const(self, gid: int, value: int) -> bool:
        gate = self.gates[gid]
        return gate.op is GateOp.const and gate.value == self.field(value)

    # 公理

    def axiom(self, lhs: int, rhs: int, axiom: AxiomInstance) -> None:
        kind = axiom.kind
        if kind not in self.script.system.axioms:
            raise _Mismatch("axiom_not_in_system", f"Axiom {kind.value} is not part of {self.script.system.name}.")
        handler = getattr(self, f"_axiom_{kind.value}")
        handler(lhs, rhs, axiom.parameters)

    def _axiom_identity(self, lhs: int, rhs: int, _: Mapping) -> None:
        if not gate_isomorphic(self.script.subcircuit(lhs), self.script.subcircuit(rhs)):
            raise _Mismatch("axiom_mismatch", "Sides of an identity axiom are not gate-isomorphic.")

    def _swap(self, lhs: int, rhs: int, op: GateOp) -> None:
        f, g = self.shape(lhs, op, "Left side")
        g2, f2 = self.shape(rhs, op, "Right side")
        self.expect_same(f, f2, "First operands")
        self.expect_same(g, g2, "Second operands")

    def _axiom_product_commutativity(self, lhs: int, rhs: int, _: Mapping) -> None:
        self._swap(lhs, rhs, GateOp.mul)

    def _axiom_addition_commutativity(self, lhs: int, rhs: int, _: Mapping) -> None:
        self._swap(lhs, rhs, GateOp.add)

    def _associativity(self, lhs: int, rhs: int, op: GateOp) -> None:
        # F ∘ (G ∘ H) = (F ∘ G) ∘ H
        f, gh = self.shape(lhs, op, "Left side")
        g, h = self.shape(gh, op, "Right operand of the left side")
        fg, h2 = self.shape(rhs, op, "Right side")
        f2, g2 = self.shape(fg, op, "Left operand of the right side")
        self.expect_same(f, f2, "F operands")
        self.expect_same(g, g2, "G operands")
        self.expect_same(h, h2, "H operands")

    def _axiom_associativity_add(self, lhs: int, rhs: int, _: Mapping) -> None:
        self._associativity(lhs, rhs, GateOp.add)

    def _axiom_associativity_mul(self, lhs: int, rhs: int, _: Mapping) -> None:
        self._associativity(lhs, rhs, GateOp.mul)

    def _axiom_distributivity_left(self, lhs: int, rhs: int, _: Mapping) -> None:
        # F·(G + H) = F·G + F·H
        f, gh = self.shape(lhs, GateOp.mul, "Left side")
        g, h = self.shape(gh, GateOp.add, "Right factor of the left side")
        fg, fh = self.shape(rhs, GateOp.add, "Right side")
        f1, g1 = self.shape(fg, GateOp.mul, "First summand")
        f2, h1 = self.shape(fh, GateOp.mul, "Second summand")
        self.expect_same(f, f1, "Common factors")
        self.expect_same(f, f2, "Common factors")
        self.expect_same(g, g1, "G operands")
        self.expect_same(h, h1, "H operands")

    def _axiom_distributivity_right(self, lhs: int, rhs: int, _: Mapping) -> None:
        # (G + H)·F = G·F + H·F
        gh, f = self.shape(lhs, GateOp.mul, "Left side")
        g, h = self.shape(gh, GateOp.add, "Left factor of the left side")
        gf, hf = self.shape(rhs, GateOp.add, "Right side")
        g1, f1 = self.shape(gf, GateOp.mul, "First summand")
        h1, f2 = self.shape(hf, GateOp.mul, "Second summand")
        self.expect_same(f, f1, "Common factors")
        self.expect_same(f, f2, "Common factors")
        self.expect_same(g, g1, "G operands")
        self.expect_same(h, h1, "H operands")

    def _axiom_zero_add(self, lhs: int, rhs: int, _: Mapping) -> None:
        f, zero = self.shape(lhs, GateOp.add, "Left side")
        if not self.is_const(zero, 0):
            raise _Mismatch("axiom_mismatch", "Second summand must be the constant 0.")
        self.expect_same(f, rhs, "F and the right side")

    def _axiom_zero_mul(self, lhs: int, rhs: int, _: Mapping) -> None:
        _, zero = self.shape(lhs, GateOp.mul, "Left side")
        if not (self.is_const(zero, 0) and self.is_const(rhs, 0)):
            raise _Mismatch("axiom_mismatch", "Expected F·0 = 0.")

    def _axiom_unit_mul(self, lhs: int, rhs: int, _: Mapping) -> None:
        f, one = self.shape(lhs, GateOp.mul, "Left side")
        if not self.is_const(one, 1):
            raise _Mismatch("axiom_mismatch", "Second factor must be the constant 1.")
        self.expect_same(f, rhs, "F and the right side")

    def _axiom_field_identity(self, lhs: int, rhs: int, _: Mapping) -> None:
        if any(self.gates[g].op is GateOp.var for g in self.table.reachable([lhs, rhs])):
            raise _Mismatch("axiom_mismatch", "Field identities may only contain constants.")
        left = eval_scalar(self.script.subcircuit(lhs), {})
        right = eval_scalar(self.script.subcircuit(rhs), {})
        if left != right:
            raise _Mismatch(
                "axiom_mismatch",
                f"Constants differ in {self.field}: {self.field.to_str(left)} vs {self.field.to_str(right)}.",
            )

    def _axiom_circuit(self, lhs: int, rhs: int, _: Mapping) -> None:
        if not formula_equal(self.script.subcircuit(lhs), self.script.subcircuit(rhs)):
            raise _Mismatch("axiom_mismatch", "Sides differ when unwound as formulas.")

    def _axiom_basis(self, lhs: int, rhs: int, parameters: Mapping) -> None:
        name = parameters.get("element")
        basis = self.script.system.basis
        if name not in basis:
            raise _Mismatch("unknown_basis_element", f"Basis has no element {name!r}.")
        if not self.is_const(rhs, 0):
            raise _Mismatch("axiom_mismatch", "A basis axiom must have right side 0.")
        element = parse_circuit(basis[name], self.field)
        images: dict[VarRef, Circuit] = {}
        for key, value in (parameters.get("substitution") or {}).items():
            try:
                var = parse_var(str(key))
                if isinstance(value, int) and not isinstance(value, bool):
                    if value not in self.script.gate_ids:
                        raise _Mismatch("axiom_mismatch", f"Substitution for {key} names unknown gate id {value}.")
                    images[var] = self.script.subcircuit(self.script.gate_ids[value])
                else:
                    images[var] = parse_circuit(str(value), self.field)
            except ParseError as e:
                raise _Mismatch("axiom_mismatch", f"Substitution for {key}: {e}") from e
        reference = substitute_circuit(element, images)
        if not formula_equal(reference, self.script.subcircuit(lhs)):
            raise _Mismatch("axiom_mismatch", f"Left side is not the declared instance of {name}.")

    def _axiom_boolean(self, lhs: int, rhs: int, _: Mapping) -> None:
        square, v = self.shape(lhs, GateOp.add, "Left side")
        a, b = self.shape(square, GateOp.mul, "First summand")
        if self.gates[v].op is not GateOp.var or not (self.same(a, v) and self.same(b, v)):
            raise _Mismatch("axiom_mismatch", "Expected x·x + x for a single variable x.")
        if not self.is_const(rhs, 0):
            raise _Mismatch("axiom_mismatch", "A Boolean axiom must have right side 0.")

    # 推理规则

    def rule(self, number: int, lhs: int, rhs: int, rule: RuleApplication) -> None:
        if len(rule.premises) != _RULE_ARITY[rule.kind]:
            raise _Mismatch(
                "bad_premise", f"Rule {rule.kind.value} takes {_RULE_ARITY[rule.kind]} premise(s), got {len(rule.premises)}."
            )
        for p in rule.premises:
            if not (1 <= p < number):
                raise _Mismatch("bad_premise", f"Premise {p} must refer to an earlier line.")
        premises = [self.script.lines[p - 1] for p in rule.premises]

        if rule.kind is RuleKind.symmetry:
            ok = self.same(lhs, premises[0].rhs) and self.same(rhs, premises[0].lhs)
        elif rule.kind is RuleKind.transitivity:
            first, second = premises
            if not self.same(first.rhs, second.lhs):
                raise _Mismatch("rule_mismatch", "Premises of transitivity do not chain.")
            ok = self.same(lhs, first.lhs) and self.same(rhs, second.rhs)
        else:
            op = GateOp.add if rule.kind is RuleKind.add_compat else GateOp.mul
            lgate, rgate = self.gates[lhs], self.gates[rhs]
            ok = (
                lgate.op is op
                and rgate.op is op
                and self.same(lgate.left, premises[0].lhs)
                and self.same(lgate.right, premises[1].lhs)
                and self.same(rgate.left, premises[0].rhs)
                and self.same(rgate.right, premises[1].rhs)
            )
        if not ok:
            raise _Mismatch("rule_mismatch", f"Line does not follow from its premises by {rule.kind.value}.")


def check_proof(script: ProofScript) -> ProofReport:
    """逐行检查证明，返回第一处失败或接受结论

    检查结果只依赖于脚本本身。
    """

    checker = _Checker(script)
    count = len(script.lines)
    for number, line in enumerate(script.lines, start=1):
        try:
            if isinstance(line.justification, AxiomInstance):
                checker.axiom(line.lhs, line.rhs, line.justification)
            else:
                checker.rule(number, line.lhs, line.rhs, line.justification)
        except _Mismatch as e:
            logger.debug("Proof rejected at line %d: %s", number, e.detail)
            return ProofReport(False, count, number, e.reason, e.detail)

    if script.goal is not None:
        goal_lhs, goal_rhs = script.goal
        if not any(checker.same(line.lhs, goal_lhs) and checker.same(line.rhs, goal_rhs) for line in script.lines):
            return ProofReport(False, count, None, "goal_not_derived", "No line proves the declared goal.")
    return ProofReport(True, count)


def check_proofs(scripts: Sequence[ProofScript], threads: Optional[int] = None) -> list[ProofReport]:
    """并行检查多个证明，结果顺序与输入一致"""

    return ordered_map(check_proof, scripts, threads)


# 可靠性抽查与行数


@dataclass
class SpotcheckReport:
    d: int
    p: int
    trials: int
    seed: int
    discrepancies: list[tuple[int, int]] = dataclass_field(default_factory=list)  # (行号, 试验序号)

    @property
    def clean(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "p": self.p,
            "trials": self.trials,
            "seed": self.seed,
            "clean": self.clean,
            "discrepancies": [{"line": line, "trial": trial} for line, trial in self.discrepancies],
        }


def soundness_spotcheck(
    script: ProofScript,
    d: int,
    p: int = Limits.DEFAULT_PRIME,
    trials: int = 50,
    seed: int = Limits.DEFAULT_SEED,
    threads: Optional[int] = None,
) -> SpotcheckReport:
    """在随机 d×d 矩阵上检验每一行两边是否相等

    不重新检查证明，因此也可用于被篡改的脚本。GF(2) 上的脚本总在 GF(2) 中求值。

    :param p: 素数，脚本在 QQ 上时使用
    :param trials: 试验次数；第 i 次试验的随机数只依赖于 (seed, i)
    """

    field = script.table.field if script.table.field.is_prime_field else prime_field(p)
    variables = script.table.variables()
    lines = [(script.subcircuit(line.lhs), script.subcircuit(line.rhs)) for line in script.lines]

    def run(trial: int) -> list[int]:
        assignment = random_assignment(variables, d, field, trial_rng(seed, trial), bound=field.characteristic)
        bad = []
        for number, (lhs, rhs) in enumerate(lines, start=1):
            difference = eval_on_matrices(lhs, assignment, dimension=d, field=field) - eval_on_matrices(
                rhs, assignment, dimension=d, field=field
            )
            if not matrix_is_zero(difference):
                bad.append(number)
        return bad

    report = SpotcheckReport(d, field.characteristic, trials, seed)
    for trial, bad in enumerate(ordered_map(run, range(trials), threads)):
        report.discrepancies.extend((number, trial) for number in bad)
    report.discrepancies.sort()
    if not report.clean:
        logger.warning("Spot check found %d discrepancies.", len(report.discrepancies))
    return report


class LineCount(NamedTuple):
    lines: int
    certificate_instances: Optional[int] = None  # 目标证书使用的实例数


def count_lines(script: ProofScript, certificate: Optional[GenerationCertificate] = None) -> LineCount:
    """证明行数；给出目标的生成证书时一并报告其实例数"""

    return LineCount(len(script.lines), None if certificate is None else certificate.instance_count)
