# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""公共测试夹具：带种子的随机多项式与随机电路生成器"""

from collections.abc import Callable

import numpy as np
import pytest

from ncpi.Core.circuit import Circuit, CircuitBuilder
from ncpi.Core.fields import QQ_FIELD, Field
from ncpi.Core.freealg import NcPoly, x


def _random_poly(rng: np.random.Generator, n_vars: int, max_degree: int, terms: int, field: Field) -> NcPoly:
    result = NcPoly.zero(field)
    for _ in range(terms):
        length = int(rng.integers(0, max_degree + 1))
        word = tuple(x(int(rng.integers(1, n_vars + 1))) for _ in range(length))
        result = result + NcPoly.monomial(word, int(rng.integers(-3, 4)), field)
    return result


def _random_circuit(rng: np.random.Generator, n_vars: int, size: int, field: Field) -> Circuit:
    builder = CircuitBuilder(field)
    pool = [builder.var(x(i)) for i in range(1, n_vars + 1)]
    pool.append(builder.const(int(rng.integers(-2, 3))))
    leaves = list(pool)
    for _ in range(size):
        left = pool[int(rng.integers(0, len(pool)))]
        if rng.integers(0, 2):
            pool.append(builder.add(left, pool[int(rng.integers(0, len(pool)))]))
        else:
            # 右因子只取叶节点，避免展开规模指数增长
            pool.append(builder.mul(left, leaves[int(rng.integers(0, len(leaves)))]))
    return builder.build([pool[-1]])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def random_poly(rng: np.random.Generator) -> Callable[..., NcPoly]:
    def make(n_vars: int = 3, max_degree: int = 3, terms: int = 5, field: Field = QQ_FIELD) -> NcPoly:
        return _random_poly(rng, n_vars, max_degree, terms, field)

    return make


@pytest.fixture
def random_circuit(rng: np.random.Generator) -> Callable[..., Circuit]:
    def make(n_vars: int = 3, size: int = 6, field: Field = QQ_FIELD) -> Circuit:
        return _random_circuit(rng, n_vars, size, field)

    return make
