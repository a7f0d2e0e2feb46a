# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""矩阵恒等式检查：符号检查、矩阵单位检查、随机检查与 Amitsur-Levitzki 套件"""

import pytest
from sympy import Rational

from ncpi.Constants import CheckMethod, VerdictKind
from ncpi.Core.circuit import parse_circuit, standard_circuit
from ncpi.Core.errors import PreconditionError
from ncpi.Core.fields import QQ_FIELD, prime_field
from ncpi.Core.freealg import NcPoly, parse_poly, standard_poly, x
from ncpi.Core.ideals import builtin_basis_element
from ncpi.Core.matcheck import (
    al_suite,
    check_identity,
    evaluate_poly,
    evaluate_poly_on_units,
    matrix_unit_check,
    random_assignment,
    random_check,
    sample_unit_check,
    symbolic_check,
    verify_witness,
)
from ncpi.Utilities.linalg import matrix_is_zero
from ncpi.Utilities.random_tools import trial_rng

COUNTEREXAMPLE = "[[x1,x2]*[x3,x4] + [x3,x4]*[x1,x2], x5]"


def S(n: int) -> NcPoly:
    return standard_poly([x(i) for i in range(1, n + 1)])


def test_standard_identities_symbolic() -> None:
    assert symbolic_check(S(2), 1).kind is VerdictKind.identity
    assert symbolic_check(S(4), 2).kind is VerdictKind.identity


def test_odd_standard_polynomials_fail_on_units() -> None:
    for n, d in ((1, 1), (3, 2), (5, 3)):
        verdict = matrix_unit_check(S(n), d)
        assert verdict.kind is VerdictKind.not_identity
        assert verify_witness(S(n), verdict)


def test_symbolic_and_units_agree_on_multilinear_inputs() -> None:
    for f, d in ((S(2), 2), (S(3), 2), (S(4), 2), (parse_poly("[x1,x2,x3]"), 1)):
        assert symbolic_check(f, d).kind is matrix_unit_check(f, d).kind


def test_symbolic_witness_is_verified() -> None:
    verdict = symbolic_check(S(3), 2)
    assert verdict.kind is VerdictKind.not_identity
    assert verify_witness(S(3), verdict)
    assert verdict.stats["nonzero_entries"]


def test_counterexample_is_identity_of_two_by_two_matrices() -> None:
    f = parse_poly(COUNTEREXAMPLE)
    assert symbolic_check(f, 2).kind is VerdictKind.identity
    assert matrix_unit_check(f, 2).kind is VerdictKind.identity


def test_hall_polynomial() -> None:
    hall = builtin_basis_element("hall")
    assert hall is not None
    assert symbolic_check(hall, 2).kind is VerdictKind.identity
    verdict = random_check(hall, 3, p=10007, trials=5, seed=1)
    assert verdict.kind is VerdictKind.not_identity
    assert verify_witness(hall, verdict)


def test_units_need_multilinear_input() -> None:
    with pytest.raises(PreconditionError):
        matrix_unit_check(parse_poly("x1*x1*x2"), 2)


def test_random_check_is_never_conclusive_for_identities() -> None:
    verdict = random_check(S(4), 2, p=10007, trials=5, seed=7)
    assert verdict.kind is VerdictKind.probable
    assert verdict.failure_bound == Rational(4, 10007) ** 5
    assert not verdict.heuristic
    assert verdict.to_dict()["verdict"] == "probable"


def test_random_check_is_reproducible() -> None:
    first = random_check(S(3), 2, trials=3, seed=42)
    second = random_check(S(3), 2, trials=3, seed=42, threads=2)
    assert first.kind is second.kind is VerdictKind.not_identity
    assert first.witness == second.witness


def test_random_check_on_circuits() -> None:
    verdict = check_identity(standard_circuit(4), 2, CheckMethod.random, trials=4, seed=3)
    assert verdict.kind is VerdictKind.probable
    verdict = check_identity(standard_circuit(3), 2, "random", trials=4, seed=3)
    assert verdict.kind is VerdictKind.not_identity
    assert verify_witness(standard_circuit(3), verdict)


def test_small_prime_is_heuristic() -> None:
    with pytest.warns(RuntimeWarning):
        verdict = random_check(S(4), 2, p=3, trials=2, seed=0)
    assert verdict.heuristic


def test_symbolic_check_over_prime_field_warns() -> None:
    with pytest.warns(RuntimeWarning):
        verdict = symbolic_check(parse_poly("[x1,x2]", prime_field(5)), 1)
    assert verdict.kind is VerdictKind.identity


def test_dimension_must_be_positive() -> None:
    with pytest.raises(PreconditionError):
        symbolic_check(S(2), 0)
    with pytest.raises(PreconditionError):
        random_check(S(2), 2, trials=0)


def test_evaluate_poly_on_units() -> None:
    f = parse_poly("x1*x2 - x2*x1")
    assert evaluate_poly_on_units(f, {x(1): (1, 2), x(2): (2, 1)}) == {(1, 1): QQ_FIELD(1), (2, 2): QQ_FIELD(-1)}
    assert evaluate_poly_on_units(f, {x(1): (1, 1), x(2): (2, 2)}) == {}


def test_evaluate_poly_matches_random_assignment() -> None:
    assignment = random_assignment((x(1), x(2)), 2, QQ_FIELD, trial_rng(0, 0))
    assert matrix_is_zero(evaluate_poly(parse_poly("x1*x2 - x2*x1 - [x1,x2]"), assignment))
    assert not verify_witness(S(2), symbolic_check(S(2), 1))


def test_random_check_warns_when_reduction_drops_terms() -> None:
    f = parse_poly("10007*x1*x2 - 10007*x2*x1")
    with pytest.warns(RuntimeWarning):
        verdict = random_check(f, 2, p=10007, trials=2, seed=0)
    assert verdict.kind is VerdictKind.probable
    assert verdict.heuristic
    assert verdict.stats["reduced_mod_p"]
    with pytest.warns(RuntimeWarning):
        assert random_check(parse_circuit("101*x1"), 1, p=101, trials=1, seed=0).heuristic


def test_random_check_never_refutes_identities() -> None:
    identities = [
        (S(2), 1),
        (S(4), 2),
        (parse_poly(COUNTEREXAMPLE), 2),
        (builtin_basis_element("hall"), 2),
    ]
    for seed in range(20):
        for f, d in identities:
            verdict = random_check(f, d, p=10007, trials=3, seed=seed)
            assert verdict.kind is VerdictKind.probable
            assert verdict.witness is None


# 维数方向的单调性


def test_identities_do_not_lift_to_larger_matrices() -> None:
    assert symbolic_check(S(4), 2).kind is VerdictKind.identity
    verdict = matrix_unit_check(S(4), 3)
    assert verdict.kind is VerdictKind.not_identity
    assert verify_witness(S(4), verdict)

    assert matrix_unit_check(S(2), 1).kind is VerdictKind.identity
    verdict = matrix_unit_check(S(2), 2)
    assert verdict.kind is VerdictKind.not_identity
    assert verify_witness(S(2), verdict)


def test_sample_unit_check() -> None:
    verdict = sample_unit_check(S(4), 2, samples=10, seed=3)
    assert verdict.kind is VerdictKind.probable
    assert verdict.stats["walks_checked"] == 6
    assert verdict.stats["samples_checked"] == 10
    verdict = sample_unit_check(S(5), 3, samples=0, seed=3)
    assert verdict.kind is VerdictKind.not_identity
    assert verify_witness(S(5), verdict)
    with pytest.raises(PreconditionError):
        sample_unit_check(parse_poly("x1*x1"), 2, samples=1, seed=0)


# Amitsur-Levitzki 套件


def test_al_suite() -> None:
    for d in (1, 2):
        report = al_suite(d)
        assert report.passed
        assert report.to_dict()["passed"]
    with pytest.raises(PreconditionError):
        al_suite(5)


def test_al_suite_three_by_three() -> None:
    report = al_suite(3, seed=0)
    assert report.even.method is CheckMethod.symbolic
    assert report.even.kind is VerdictKind.identity
    assert report.odd.kind is VerdictKind.not_identity
    assert verify_witness(S(5), report.odd)
    assert report.passed


def test_al_suite_four_by_four_uses_random_and_units() -> None:
    report = al_suite(4, trials=2, seed=5)
    assert report.even.method is CheckMethod.random
    assert report.even.kind is VerdictKind.probable
    units = report.even.stats["units"]
    assert units["walks_checked"] == 140
    assert units["samples_checked"] == 2
    assert not units["walks_skipped"]
    assert verify_witness(S(7), report.odd)
    assert report.passed
