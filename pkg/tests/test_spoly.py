# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""s-多项式、张量、秩分解与计数界"""

import pytest

from ncpi.Core.errors import PreconditionError
from ncpi.Core.fields import QQ_FIELD, prime_field
from ncpi.Core.freealg import parse_poly
from ncpi.Core.ideals import verify_certificate
from ncpi.Core.spoly import (
    RankDecomposition,
    Tensor,
    cert_from_decomposition,
    counting_bound,
    make_s_poly,
    phi_map,
    phi_map_closed_form,
    poly_from_tensor,
    tensor_from_document,
    tensor_rank_bruteforce,
    tensor_to_document,
)
from ncpi.Utilities.documents import load_document

GF2 = prime_field(2)


def corpus_tensor(name: str):
    return tensor_from_document(load_document(f"corpus/{name}.tensor"))


def test_counting_bound() -> None:
    bound = counting_bound(8, 1)
    assert bound.value.startswith("3.6106")
    assert bound.binomial == 28
    assert "log(2)" in bound.expression
    assert counting_bound(3, 2) == ("0", 0, "0")
    with pytest.raises(PreconditionError):
        counting_bound(4, 0)


def test_make_s_poly() -> None:
    assert make_s_poly({(1, 2): 1, (3, 4): 1, (1, 3): 0}, 4, 1) == parse_poly("[x1,x2] + [x3,x4]")
    with pytest.raises(PreconditionError):
        make_s_poly({(1, 2): 2}, 4, 1)
    with pytest.raises(PreconditionError):
        make_s_poly({(2, 1): 1}, 4, 1)
    with pytest.raises(PreconditionError):
        make_s_poly({(1, 2, 3, 4): 1}, 3, 2)


def test_tensor_indexing_is_one_based() -> None:
    tensor = Tensor.from_entries(3, 2, [((1, 2, 1), 3), ((1, 2, 1), 1)])
    assert tensor[1, 2, 1] == QQ_FIELD(4)
    assert tensor.entries() == [((1, 2, 1), QQ_FIELD(4))]
    with pytest.raises(PreconditionError):
        tensor[3, 1, 1]


def test_poly_from_tensor() -> None:
    tensor, _ = corpus_tensor("rank3")
    expected = ["2*[x1,x2] + [x1,x4] + [x3,x2] + [x3,x4]", "[x1,x2] + [x1,x4] + [x3,x2] + 2*[x3,x4]", "0", "0"]
    assert poly_from_tensor(tensor) == [parse_poly(text) for text in expected]
    tensor, _ = corpus_tensor("simple")
    assert poly_from_tensor(tensor) == [parse_poly("x1*x2 - x2*x1", GF2), parse_poly("0", GF2)]
    tensor, _ = corpus_tensor("antisymmetric")
    assert all(f.is_zero() for f in poly_from_tensor(tensor))


def test_poly_from_tensor_needs_odd_order() -> None:
    with pytest.raises(PreconditionError):
        poly_from_tensor(Tensor.zeros(2, 3))


def test_certificates_from_decomposition() -> None:
    _, decomposition = corpus_tensor("rank3")
    certificates = cert_from_decomposition(decomposition)
    assert len(certificates) == 4
    for certificate in certificates:
        check = verify_certificate(certificate)
        assert check.valid
        assert check.instance_count <= len(decomposition)


# 张量秩


def test_w_state_has_rank_three() -> None:
    tensor, _ = corpus_tensor("w_state")
    assert tensor.flattening_rank() == 2
    result = tensor_rank_bruteforce(tensor, max_rank=3)
    assert result.rank == 3
    assert not result.exceeded
    assert result.decomposition is not None
    assert result.decomposition.tensor() == tensor
    assert tensor_rank_bruteforce(tensor, max_rank=3, threads=2).rank == 3


def test_rank_search_can_be_exceeded() -> None:
    tensor, _ = corpus_tensor("w_state")
    result = tensor_rank_bruteforce(tensor, max_rank=2)
    assert result.rank is None
    assert result.exceeded
    assert result.decomposition is None


def test_small_ranks() -> None:
    tensor, _ = corpus_tensor("identity_matrix")
    assert tensor_rank_bruteforce(tensor, max_rank=2).rank == 2
    tensor, _ = corpus_tensor("zero")
    assert tensor_rank_bruteforce(tensor, max_rank=1).rank == 0
    tensor, _ = corpus_tensor("simple")
    assert tensor_rank_bruteforce(tensor, max_rank=1).rank == 1


def test_rank_needs_prime_field() -> None:
    tensor, _ = corpus_tensor("rank3")
    with pytest.raises(PreconditionError):
        tensor_rank_bruteforce(tensor, max_rank=3)


def test_tensor_document_reads_back() -> None:
    tensor, decomposition = corpus_tensor("simple")
    again, again_decomposition = tensor_from_document(tensor_to_document(tensor, decomposition))
    assert again == tensor
    assert again_decomposition is not None
    assert again_decomposition.tensor() == tensor


# 多项式映射


def test_phi_map_matches_closed_form() -> None:
    c = [[1, 2], [0, -1], [3, 0], [1, 1]]
    a = [
        [[1, 0, 2, -1], [0, 1, 1, 3]],
        [[2, 1, 0, 0], [-1, 0, 1, 2]],
    ]
    direct = phi_map(c, a, 4, 1, 2)
    assert direct == phi_map_closed_form(c, a, 4, 1, 2)
    assert not direct.is_zero()
    with pytest.raises(PreconditionError):
        phi_map(c[:3], a, 4, 1, 2)


# 随机性质


def test_phi_map_matches_closed_form_on_random_draws(rng) -> None:
    for _ in range(50):
        c = rng.integers(-3, 4, size=(4, 2)).tolist()
        a = rng.integers(-3, 4, size=(2, 2, 4)).tolist()
        assert phi_map(c, a, 4, 1, 2) == phi_map_closed_form(c, a, 4, 1, 2)


def test_certificates_use_at_most_rank_instances(rng) -> None:
    for _ in range(50):
        rank = int(rng.integers(1, 6))
        side = int(rng.integers(2, 5))
        terms = [rng.integers(-2, 3, size=(3, side)).tolist() for _ in range(rank)]
        decomposition = RankDecomposition(3, side, QQ_FIELD, terms)
        certificates = cert_from_decomposition(decomposition)
        assert len(certificates) == side
        for certificate in certificates:
            check = verify_certificate(certificate)
            assert check.valid
            assert check.instance_count <= rank


def test_certificates_from_brute_force_rank(rng) -> None:
    for _ in range(10):
        terms = [rng.integers(0, 2, size=(3, 2)).tolist() for _ in range(int(rng.integers(1, 4)))]
        tensor = RankDecomposition(3, 2, GF2, terms).tensor()
        result = tensor_rank_bruteforce(tensor, max_rank=3)
        assert not result.exceeded
        assert result.decomposition.tensor() == tensor
        for certificate in cert_from_decomposition(result.decomposition):
            check = verify_certificate(certificate)
            assert check.valid
            assert check.instance_count <= result.rank
