# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""代数对象、检查方法、证明系统相关的枚举常量"""

__all__ = [
    "VarKind",
    "GateOp",
    "Grading",
    "CheckMethod",
    "VerdictKind",
    "SystemVariant",
    "AxiomKind",
    "RuleKind",
    "OutputFormat",
]

import enum


@enum.unique
class VarKind(enum.IntEnum):
    """变量种类，取值顺序即变量全序中的种类优先级"""

    X = 0
    Z = 1
    ENTRY = 2


@enum.unique
class GateOp(enum.Enum):
    """电路门的种类"""

    var = "var"
    const = "const"
    add = "add"
    mul = "mul"


@enum.unique
class Grading(enum.Enum):
    """齐次分量的分次方式"""

    total = "total"
    z_degree = "z_degree"


@enum.unique
class CheckMethod(enum.Enum):
    """矩阵恒等式的检查方法"""

    symbolic = "symbolic"
    units = "units"
    random = "random"


@enum.unique
class VerdictKind(enum.Enum):
    """恒等式检查结论"""

    identity = "identity"
    not_identity = "not_identity"
    probable = "probable"


@enum.unique
class SystemVariant(enum.Enum):
    """证明系统的变体"""

    pc = "pc"
    pmatd = "pmatd"
    pcbool = "pcbool"


@enum.unique
class AxiomKind(enum.Enum):
    """公理种类"""

    identity = "identity"
    product_commutativity = "product_commutativity"
    addition_commutativity = "addition_commutativity"
    associativity_add = "associativity_add"
    associativity_mul = "associativity_mul"
    distributivity_left = "distributivity_left"
    distributivity_right = "distributivity_right"
    zero_add = "zero_add"
    zero_mul = "zero_mul"
    unit_mul = "unit_mul"
    field_identity = "field_identity"
    circuit = "circuit"
    basis = "basis"
    boolean = "boolean"


@enum.unique
class RuleKind(enum.Enum):
    """推理规则种类"""

    symmetry = "symmetry"
    transitivity = "transitivity"
    add_compat = "add_compat"
    mul_compat = "mul_compat"


@enum.unique
class OutputFormat(enum.Enum):
    """命令行报告的输出格式"""

    text = "text"
    json = "json"
