# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""生成证书、证书组合、成员判定与交换子工具"""

import pytest

from ncpi.Core import ideals
from ncpi.Core.errors import PreconditionError
from ncpi.Core.fields import QQ_FIELD
from ncpi.Core.freealg import NcPoly, homogeneous_part, parse_poly, x, z
from ncpi.Core.ideals import (
    CommutatorPolynomial,
    GenerationCertificate,
    SubstitutionInstance,
    Summand,
    builtin_basis_element,
    certificate_from_document,
    certificate_to_document,
    collapse_check,
    compose_certificates,
    composition_bound,
    composition_from_document,
    linear_reduce,
    linear_reduce_certificate,
    membership_from_document,
    multilinear_membership,
    q_commutator_exact,
    transfer_witness,
    verify_certificate,
)
from ncpi.Utilities.documents import load_document

P = parse_poly


def test_builtin_basis_elements() -> None:
    assert builtin_basis_element("commutator") == P("x1*x2 - x2*x1")
    assert len(builtin_basis_element("S4")) == 24
    assert builtin_basis_element("S_3") == builtin_basis_element("S3")
    assert builtin_basis_element("hall") == P("[[x1,x2]^2,x3]")
    assert builtin_basis_element("S") is None


# 证书


def test_instances_compare_by_expansion() -> None:
    comm = builtin_basis_element("commutator")
    s2 = builtin_basis_element("S2")
    first = SubstitutionInstance("commutator", comm, {x(1): P("x3")})
    second = SubstitutionInstance("S2", s2, {x(1): P("x3"), x(2): P("x2")})
    assert first == second
    certificate = GenerationCertificate(
        first.expansion.scale(2),
        [Summand(NcPoly.one(), first, NcPoly.one()), Summand(NcPoly.one(), second, NcPoly.one())],
    )
    assert certificate.instance_count == 1
    assert verify_certificate(certificate).valid


def test_corpus_certificate_verifies() -> None:
    certificate = certificate_from_document(load_document("corpus/commutator_example.cert"))
    check = verify_certificate(certificate)
    assert check.valid
    assert check.instance_count == 1
    assert check.residual.is_zero()


def test_invalid_certificate_has_residual() -> None:
    document = load_document("corpus/commutator_example.cert")
    document["target"] = "x1*x3 - x3*x1"
    check = verify_certificate(certificate_from_document(document))
    assert not check.valid
    assert check.residual == P("x2*x3 - x3*x2").scale(-1)


def test_certificate_document_reads_back() -> None:
    certificate = q_commutator_exact(P("[x1,x2] + [x3,x4]")).certificate
    assert verify_certificate(certificate_from_document(certificate_to_document(certificate))).valid


# 组合


@pytest.mark.parametrize("name", ["corpus/triple_commutator.compose", "corpus/sandwich.compose"])
def test_composition(name: str) -> None:
    outer, inner = composition_from_document(load_document(name))
    composed = compose_certificates(outer, inner)
    r, q = composition_bound(outer, inner)
    check = verify_certificate(composed)
    assert check.valid
    assert check.instance_count <= r * q


def test_composition_needs_inner_certificates() -> None:
    outer, _ = composition_from_document(load_document("corpus/triple_commutator.compose"))
    with pytest.raises(PreconditionError):
        compose_certificates(outer, {})


def test_composition_enforces_instance_bound(monkeypatch) -> None:
    outer, inner = composition_from_document(load_document("corpus/triple_commutator.compose"))
    monkeypatch.setattr(ideals, "composition_bound", lambda outer, inner: (0, 0))
    with pytest.raises(PreconditionError, match="bound"):
        compose_certificates(outer, inner)


# 成员判定


def test_commutator_ideal_membership() -> None:
    result = multilinear_membership(P("[x1,x2,x3]"), [builtin_basis_element("commutator")], [x(1), x(2), x(3)])
    assert result.member
    assert result.dimension == 6
    assert result.certificate is not None
    assert verify_certificate(result.certificate).valid


def test_counterexample_is_not_generated_by_s4() -> None:
    target, generators, variables = membership_from_document(load_document("corpus/counterexample.membership"))
    result = multilinear_membership(target, generators, variables)
    assert not result.member
    assert result.certificate is None
    assert result.dimension == 120
    assert result.rank < result.dimension


def test_membership_preconditions() -> None:
    with pytest.raises(PreconditionError):
        multilinear_membership(P("x1*x1"), [builtin_basis_element("commutator")], [x(1)])
    with pytest.raises(PreconditionError):
        multilinear_membership(P("x1"), [builtin_basis_element("commutator")], [x(i) for i in range(1, 9)])


# 交换子基下的复杂度


def test_q_commutator_exact() -> None:
    assert q_commutator_exact(P("x1*x2 - x2*x1")).q == 1
    assert q_commutator_exact(P("x1*x3 - x3*x1 + x2*x3 - x3*x2")).q == 1
    result = q_commutator_exact(P("[x1,x2] + [x3,x4]"))
    assert result.q == 2
    assert result.rank == 4
    check = verify_certificate(result.certificate)
    assert check.valid
    assert check.instance_count == 2


def test_q_commutator_rejects_other_polynomials() -> None:
    with pytest.raises(PreconditionError):
        q_commutator_exact(P("x1*x2"))
    with pytest.raises(PreconditionError):
        q_commutator_exact(P("[x1,x2,x3]"))


# 线性化约简与转移


def test_linear_reduce_certificate() -> None:
    s2 = builtin_basis_element("S2")
    instance = SubstitutionInstance("S2", s2, {x(1): P("x1 + x1*x2"), x(2): P("x2 + 3")})
    target = instance.expansion + P("x3") * instance.expansion
    certificate = GenerationCertificate(
        target,
        [Summand(NcPoly.one(), instance, NcPoly.one()), Summand(P("x3"), instance, NcPoly.one())],
    )
    assert verify_certificate(certificate).valid
    reduced = linear_reduce_certificate(certificate, 2)
    assert reduced.target == P("[x1,x2]")
    assert len(reduced.summands) == 1
    assert verify_certificate(reduced).valid


def test_transfer_witness() -> None:
    certificate = transfer_witness([P("x3")], [P("x4")], [P("x6*z1"), P("x2")], 1)
    assert certificate.target == P("z1*x2*x4*x3*x6 - z1*x4*x3*x2*x6")
    assert verify_certificate(certificate).valid
    assert certificate.instance_count == 1


def test_linear_reduce_keeps_the_degree_two_part(random_poly) -> None:
    s2 = builtin_basis_element("S2")
    for _ in range(100):
        instance = SubstitutionInstance("S2", s2, {x(1): random_poly(), x(2): random_poly()})
        reduced = linear_reduce([instance])
        total = sum((r.expansion for r in reduced), NcPoly.zero())
        assert homogeneous_part(instance.expansion, 2) == total

        h, ell = random_poly(terms=2), random_poly(terms=2)
        certificate = GenerationCertificate(h * instance.expansion * ell, [Summand(h, instance, ell)])
        lowered = linear_reduce_certificate(certificate, 2)
        assert verify_certificate(lowered).valid
        assert lowered.instance_count <= certificate.instance_count


def test_transfer_witness_on_random_pairs(random_poly, rng) -> None:
    for _ in range(100):
        k = int(rng.integers(1, 3))
        Fs = [random_poly(max_degree=2, terms=2) for _ in range(k)]
        Gs = [random_poly(max_degree=2, terms=2) for _ in range(k)]
        slot = random_poly(max_degree=1, terms=2) * P("z1") * random_poly(max_degree=1, terms=2)
        Ps = [slot + random_poly(max_degree=2, terms=2), random_poly(max_degree=2, terms=2)]
        j = 1
        if rng.integers(0, 2):
            Ps.reverse()
            j = 2
        certificate = transfer_witness(Fs, Gs, Ps, j)
        assert verify_certificate(certificate).valid
        assert certificate.instance_count <= 1


def test_transfer_witness_needs_even_arity() -> None:
    with pytest.raises(PreconditionError):
        transfer_witness([P("x3")], [P("x4")], [NcPoly.var(z(1)), P("x2"), P("x5")], 1)


# 坍缩


def test_collapse_check(rng) -> None:
    variables = [x(1), x(2), x(3), x(4)]
    for _ in range(100):
        terms = []
        for _ in range(3):
            order = [variables[int(i)] for i in rng.permutation(4)]
            blocks = [order] if rng.integers(0, 2) else [order[:2], order[2:]]
            terms.append((int(rng.integers(1, 10)), blocks))
        f = CommutatorPolynomial(terms)
        assert f.is_multilinear()
        assert collapse_check(f, variables[int(rng.integers(0, 4))], int(rng.integers(1, 10)))


def test_collapse_check_needs_multilinear_input() -> None:
    with pytest.raises(PreconditionError):
        collapse_check(CommutatorPolynomial([(1, [[x(1), x(2)]]), (1, [[x(1), x(3)]])]), x(1), 2)
    with pytest.raises(PreconditionError):
        collapse_check(P("[x1,x2]"), x(1), 2)
    assert CommutatorPolynomial([(1, [[x(1), x(2)]])], QQ_FIELD).poly == P("[x1,x2]")
