# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""标量域：有理数域 QQ 与素域 GF(p)

`Field` 是对 sympy 域对象的轻量包装，负责元素的构造、转换、格式化与随机取样。
域元素本身直接使用 sympy 的域元素类型，所有运算均为精确运算。
"""

__all__ = [
    "Field",
    "QQ_FIELD",
    "prime_field",
    "field_of_domain",
    "parse_field",
]

import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

import numpy as np
from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ

from ..Constants import Limits
from .errors import FieldMismatchError, ParseError, PreconditionError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_FIELD_RE = re.compile(r"^\s*(?:GF\(\s*(\d+)\s*\)|(\d+))\s*$")


@functools.lru_cache(maxsize=None)
def _domain_for(characteristic: int):
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class Field:
    """标量域，characteristic 为 0 表示有理数域，否则为素域 GF(p)"""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p == 0:
            return
        if not (2 <= p < Limits.PRIME_BOUND) or not isprime(p):
            raise PreconditionError(
                f"Field characteristic must be 0 or a prime below 2^61, got {p}."
            )

    @property
    def domain(self):
        """对应的 sympy 域对象"""

        return _domain_for(self.characteristic)

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __call__(self, value: Union[int, Fraction, Rational, str, Any]):
        """将整数、分数、字符串或其他域的元素转换为本域元素

        :param value: 待转换的值
        :return: 本域元素
        :raise PreconditionError: 分母在素域中不可逆
        """

        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, np.integer)):
            return self.domain(int(value))
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (Fraction, Rational)):
            return self.from_rational(int(value.numerator), int(value.denominator))
        return self.convert(value)

    def from_rational(self, numerator: int, denominator: int = 1):
        """由分子分母构造元素"""

        if denominator == 0:
            raise PreconditionError("Zero denominator.")
        if self.characteristic == 0:
            return QQ(numerator, denominator)
        K = self.domain
        if denominator % self.characteristic == 0:
            raise PreconditionError(
                f"Denominator {denominator} is not invertible in {self}."
            )
        return K(numerator) * K.revert(K(denominator))

    def convert(self, element):
        """将 QQ 或同一素域中的元素转换为本域元素

        :raise FieldMismatchError: 无法在两个域之间转换
        """

        if self.characteristic == 0:
            if QQ.of_type(element):
                return element
            raise FieldMismatchError(f"Cannot convert {element!r} into QQ.")
        if QQ.of_type(element):
            return self.from_rational(int(QQ.numer(element)), int(QQ.denom(element)))
        if self.domain.of_type(element):
            return element
        raise FieldMismatchError(f"Cannot convert {element!r} into {self}.")

    def parse(self, text: str):
        """解析形如 "3"、"-2/5" 的标量文本

        :raise ParseError: 文本不是合法的有理数
        """

        match = _RATIONAL_RE.match(text)
        if match is None:
            raise ParseError(f"Invalid scalar {text!r}", 0)
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        return self.from_rational(numerator, denominator)

    def is_zero(self, element) -> bool:
        return not element

    def inv(self, element):
        return self.domain.revert(element)

    def to_int(self, element) -> int:
        """素域元素的代表元，取值于 [0, p)"""

        return int(self.domain.to_int(element)) % self.characteristic

    def to_fraction(self, element) -> Fraction:
        if self.characteristic == 0:
            return Fraction(int(QQ.numer(element)), int(QQ.denom(element)))
        return Fraction(self.to_int(element))

    def key(self, element) -> Union[int, tuple[int, int]]:
        """可哈希的元素键，用于去重与规范形式"""

        if self.characteristic == 0:
            return int(QQ.numer(element)), int(QQ.denom(element))
        return self.to_int(element)

    def is_negative(self, element) -> bool:
        """有理数是否为负；素域元素从不视为负"""

        return self.characteristic == 0 and QQ.numer(element) < 0

    def to_str(self, element) -> str:
        if self.characteristic == 0:
            num, den = self.key(element)
            return str(num) if den == 1 else f"{num}/{den}"
        return str(self.to_int(element))

    def random_element(self, rng: np.random.Generator, bound: int = 3):
        """随机元素：素域上均匀分布；有理数域上取 [-bound, bound] 中的整数"""

        if self.characteristic == 0:
            return QQ(int(rng.integers(-bound, bound + 1)))
        return self.domain(int(rng.integers(0, self.characteristic)))

    def check_same(self, other: "Field") -> None:
        """:raise FieldMismatchError: 两个域不同"""

        if self != other:
            raise FieldMismatchError(f"Field mismatch: {self} vs {other}.")


QQ_FIELD = Field(0)


def prime_field(p: int) -> Field:
    """构造素域 GF(p)"""

    return Field(p)


def field_of_domain(domain) -> Field:
    """由 sympy 域对象反推 `Field`"""

    return Field(int(domain.characteristic()))


def parse_field(text: Union[str, int, None]) -> Field:
    """解析域描述："QQ"、"0"、"GF(p)" 或素数 p

    :raise ParseError: 无法识别的域描述
    :raise PreconditionError: p 不是合法的素数
    """

    if text is None:
        return QQ_FIELD
    if isinstance(text, int):
        return Field(text)
    if text.strip().upper() in ("QQ", "Q"):
        return QQ_FIELD
    match = _FIELD_RE.match(text)
    if match is None:
        raise ParseError(f"Invalid field {text!r}", 0)
    return Field(int(match.group(1) or match.group(2)))
