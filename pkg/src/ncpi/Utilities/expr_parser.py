# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""多项式 / 电路公式文本的语法分析器，基于 pyparsing

语法（空白无关）：

    poly   := [sign] term (sign term)*
    term   := power (['*'] power)*
    power  := atom ['^' INT]
    atom   := var | coeff | '(' poly ')' | '[' poly (',' poly)+ ']'
    var    := 'x'INT | 'z'INT | 'e'INT'_'INT'_'INT
    coeff  := INT ['/' INT]

相邻因子按从左到右的顺序相乘；`[a,b,c]` 为左嵌套的广义交换子。
分析结果是不依赖代数后端的语法树 `Node`，由调用方决定将其展开为多项式还是构造为电路。
"""

__all__ = [
    "Node",
    "ExpressionSyntaxError",
    "parse_expression",
]

import functools
from dataclasses import dataclass
from typing import Any

import pyparsing as pp


@dataclass(frozen=True)
class Node:
    """语法树节点

    kind 取值与 args 含义：
        "num":  (numerator, denominator)
        "var":  (letter, indices)，letter 为 "x"、"z" 或 "e"
        "mul":  (factor, factor, ...)
        "pow":  (base, exponent)
        "comm": (poly, poly, ...)
        "sum":  ((sign, term), ...)，sign 为 +1 或 -1
    """

    kind: str
    args: tuple[Any, ...]


class ExpressionSyntaxError(ValueError):
    """表达式语法错误，position 为出错处的字符偏移量"""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


def _var_action(tokens: pp.ParseResults) -> Node:
    text: str = tokens[0]
    if text[0] == "e":
        return Node("var", ("e", tuple(int(part) for part in text[1:].split("_"))))
    return Node("var", (text[0], (int(text[1:]),)))


def _num_action(tokens: pp.ParseResults) -> Node:
    parts = [part.strip() for part in tokens[0].split("/")]
    denominator = int(parts[1]) if len(parts) == 2 else 1
    return Node("num", (int(parts[0]), denominator))


def _power_action(tokens: pp.ParseResults) -> Node:
    if len(tokens) == 1:
        return tokens[0]
    return Node("pow", (tokens[0], int(tokens[1])))


def _term_action(tokens: pp.ParseResults) -> Node:
    if len(tokens) == 1:
        return tokens[0]
    return Node("mul", tuple(tokens))


def _comm_action(tokens: pp.ParseResults) -> Node:
    return Node("comm", tuple(tokens[0]))


def _poly_action(tokens: pp.ParseResults) -> Node:
    pairs = []
    for i in range(0, len(tokens), 2):
        pairs.append((1 if tokens[i] == "+" else -1, tokens[i + 1]))
    if len(pairs) == 1 and pairs[0][0] == 1:
        return pairs[0][1]
    return Node("sum", tuple(pairs))


@functools.lru_cache(maxsize=1)
def _grammar() -> pp.ParserElement:
    """构造（并缓存）语法对象"""

    poly = pp.Forward()

    var = pp.Regex(r"e\d+_\d+_\d+|[xz]\d+")
    var.set_parse_action(_var_action)
    number = pp.Regex(r"\d+(?:\s*/\s*\d+)?")
    number.set_parse_action(_num_action)

    group = pp.Suppress("(") - poly - pp.Suppress(")")
    commutator = pp.Group(
        pp.Suppress("[")
        - poly
        - pp.OneOrMore(pp.Suppress(",") - poly)
        - pp.Suppress("]")
    )
    commutator.set_parse_action(_comm_action)

    atom = var | number | group | commutator
    power = atom + pp.Optional(pp.Suppress("^") - pp.Word(pp.nums))
    power.set_parse_action(_power_action)

    term = power + pp.ZeroOrMore(pp.Suppress("*") - power | power)
    term.set_parse_action(_term_action)

    sign = pp.one_of("+ -")
    poly <<= pp.Optional(sign, default="+") + term + pp.ZeroOrMore(sign - term)
    poly.set_parse_action(_poly_action)

    return poly


def parse_expression(text: str) -> Node:
    """解析多项式 / 公式文本

    :param text: 输入文本
    :return: 语法树根节点
    :raise ExpressionSyntaxError: 语法错误，携带出错位置
    """

    try:
        result = _grammar().parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise ExpressionSyntaxError(f"Syntax error: {e.msg}", e.loc) from e
    return result[0]
