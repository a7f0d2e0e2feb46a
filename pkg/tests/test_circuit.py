# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""电路的构造、展开、比较、降阶与求值"""

import numpy as np
import pytest

from ncpi.Core.circuit import (
    CircuitBuilder,
    as_matrix,
    circuit_degree,
    circuit_from_document,
    circuit_to_document,
    eval_on_matrices,
    eval_scalar,
    expand,
    formula_equal,
    from_poly,
    gate_isomorphic,
    lowering_size_bound,
    matrix_expand,
    parse_circuit,
    print_circuit,
    standard_circuit,
    substitute_circuit,
)
from ncpi.Core.errors import CapExceededError, CircuitStructureError, DocumentError, PreconditionError
from ncpi.Core.fields import QQ_FIELD, prime_field
from ncpi.Core.freealg import entry, format_poly, parse_poly, standard_poly, x
from ncpi.Utilities.linalg import matrix_is_zero, matrix_rows

GF101 = prime_field(101)

E11 = [[1, 0], [0, 0]]
E12 = [[0, 1], [0, 0]]
I2 = [[1, 0], [0, 1]]


def test_formula_text_keeps_structure() -> None:
    c = parse_circuit("x1*x2 - x2*x1")
    assert c.size == 7
    assert expand(c) == [parse_poly("[x1,x2]")]
    assert circuit_degree(c) == 2


def test_from_poly_matches_canonical_text() -> None:
    f = parse_poly("-3 + 2*x1*x2 - x2*x1 + x1")
    assert gate_isomorphic(from_poly(f), parse_circuit(format_poly(f)))
    assert expand(from_poly(f)) == [f]


def test_document_cycle_is_rejected() -> None:
    document = {
        "gates": [
            {"id": "a", "op": "var", "payload": "x1"},
            {"id": "b", "op": "add", "payload": ["a", "c"]},
            {"id": "c", "op": "mul", "payload": ["b", "a"]},
        ],
        "outputs": ["c"],
    }
    with pytest.raises(CircuitStructureError):
        circuit_from_document(document)


def test_document_errors() -> None:
    with pytest.raises(CircuitStructureError):
        circuit_from_document({"gates": [{"id": 0, "op": "add", "payload": [0, 7]}], "outputs": [0]})
    with pytest.raises(DocumentError):
        circuit_from_document({"gates": [{"id": 0, "op": "sub", "payload": [0, 0]}]})
    with pytest.raises(DocumentError):
        circuit_from_document({"outputs": [0]})


def test_document_ids_are_renumbered() -> None:
    document = {
        "field": "QQ",
        "gates": [
            {"id": 10, "op": "mul", "payload": [3, 5]},
            {"id": 3, "op": "var", "payload": "x1"},
            {"id": 5, "op": "const", "payload": "-2"},
        ],
        "outputs": [10],
    }
    c = circuit_from_document(document)
    assert expand(c) == [parse_poly("-2*x1")]
    assert circuit_to_document(c)["gates"][-1]["op"] == "mul"


def test_printed_circuit_reads_back() -> None:
    c = parse_circuit("(x1 + 2)*x2 - x2*x1")
    assert gate_isomorphic(parse_circuit(print_circuit(c)), c)


def test_formula_equal_ignores_sharing() -> None:
    builder = CircuitBuilder()
    m = builder.mul(builder.var(x(1)), builder.var(x(2)))
    shared = builder.build([builder.add(m, m)])
    unshared = parse_circuit("x1*x2 + x1*x2")
    assert formula_equal(shared, unshared)
    assert not gate_isomorphic(shared, unshared)
    assert not formula_equal(parse_circuit("x1*x2"), parse_circuit("x2*x1"))


def test_formula_equal_is_an_equivalence(random_circuit) -> None:
    circuits = []
    for _ in range(12):
        c = random_circuit(size=5)
        circuits.extend([c, parse_circuit(print_circuit(c))])
    circuits.append(parse_circuit("x1*x2 + x1*x2"))
    builder = CircuitBuilder()
    m = builder.mul(builder.var(x(1)), builder.var(x(2)))
    circuits.append(builder.build([builder.add(m, m)]))

    n = len(circuits)
    equal = [[formula_equal(circuits[i], circuits[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        assert equal[i][i]
        for j in range(n):
            assert equal[i][j] == equal[j][i]
            if equal[i][j]:
                assert expand(circuits[i]) == expand(circuits[j])
            for k in range(n):
                if equal[i][j] and equal[j][k]:
                    assert equal[i][k]
    assert equal[-1][-2]
    assert all(equal[2 * i][2 * i + 1] for i in range(12))


def test_expand_cap() -> None:
    with pytest.raises(CapExceededError) as info:
        expand(parse_circuit("(x1 + x2)^4"), monomial_cap=4)
    assert info.value.where is not None


def test_substitute_circuit() -> None:
    c = substitute_circuit(parse_circuit("x1*x2"), {x(1): parse_circuit("x2 + 1")})
    assert expand(c) == [parse_poly("x2*x2 + x2")]


def test_standard_circuit_expands_to_standard_polynomial() -> None:
    for n in (1, 2, 3, 4):
        variables = [x(i) for i in range(1, n + 1)]
        assert expand(standard_circuit(n)) == [standard_poly(variables)]


# 降阶


def test_lowered_commutator_entry() -> None:
    c = parse_circuit("x1*x2 - x2*x1")
    family = matrix_expand(c, 2)
    expected = parse_poly("e1_1_1*e2_1_1 + e1_1_2*e2_2_1 - e2_1_1*e1_1_1 - e2_1_2*e1_2_1")
    assert expand(family.entry_circuit(1, 1)) == [expected]
    assert family.size <= lowering_size_bound(c, 2)
    with pytest.raises(PreconditionError):
        family.entry(3, 1)


def test_lowering_size_bound_on_random_circuits(random_circuit, rng) -> None:
    for _ in range(100):
        c = random_circuit(size=int(rng.integers(1, 57)))
        assert c.size <= 60
        for d in (1, 2, 3):
            assert matrix_expand(c, d).size <= lowering_size_bound(c, d)


def test_lowering_agrees_with_matrix_evaluation(random_circuit, rng) -> None:
    for sample in range(100):
        c = random_circuit(size=int(rng.integers(1, 57)))
        d = 1 + sample % 3
        family = matrix_expand(c, d)
        assert family.size <= lowering_size_bound(c, d)
        matrices = {x(i): rng.integers(0, 101, size=(d, d)).tolist() for i in (1, 2, 3)}
        value = matrix_rows(eval_on_matrices(c, matrices, dimension=d, field=GF101))
        scalars = {
            entry(i, j + 1, k + 1): matrices[x(i)][j][k] for i in (1, 2, 3) for j in range(d) for k in range(d)
        }
        for j in range(1, d + 1):
            for k in range(1, d + 1):
                got = eval_scalar(family.circuit, scalars, output=(j - 1) * d + (k - 1), field=GF101)
                assert got == value[j - 1][k - 1]


# 求值


def test_eval_on_matrices_examples() -> None:
    commutator = parse_circuit("x1*x2 - x2*x1")
    assert matrix_is_zero(eval_on_matrices(commutator, {x(1): I2, x(2): I2}))
    product = eval_on_matrices(parse_circuit("x1*x2"), {x(1): E11, x(2): E12})
    assert product == as_matrix(E12, QQ_FIELD)


def test_eval_on_matrices_errors() -> None:
    with pytest.raises(PreconditionError):
        eval_on_matrices(parse_circuit("x1*x2"), {x(1): I2})
    with pytest.raises(PreconditionError):
        eval_on_matrices(parse_circuit("x1*x2"), {x(1): I2, x(2): np.eye(3, dtype=int).tolist()})
