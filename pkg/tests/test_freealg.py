# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""域与自由代数运算的测试"""

import pytest

from ncpi.Constants import Grading
from ncpi.Core.errors import CapExceededError, FieldMismatchError, ParseError, PreconditionError
from ncpi.Core.fields import QQ_FIELD, Field, parse_field, prime_field
from ncpi.Core.freealg import (
    NcPoly,
    bracket_map,
    combine,
    entry,
    format_poly,
    gen_commutator,
    homogeneous_part,
    is_multilinear,
    multihomogeneous_components,
    multilinearize,
    parse_poly,
    parse_var,
    rename_variables,
    standard_of,
    standard_poly,
    substitute,
    x,
    z,
)

GF2 = prime_field(2)
GF7 = prime_field(7)


def P(text: str, field: Field = QQ_FIELD) -> NcPoly:
    return parse_poly(text, field)


# 域


def test_parse_field() -> None:
    assert parse_field("QQ") == QQ_FIELD
    assert parse_field(None) == QQ_FIELD
    assert parse_field("GF(7)") == GF7
    assert parse_field("7") == GF7
    assert parse_field(2) == GF2
    assert str(GF7) == "GF(7)"


def test_parse_field_rejects_bad_input() -> None:
    with pytest.raises(PreconditionError):
        parse_field("GF(6)")
    with pytest.raises(ParseError):
        parse_field("reals")


def test_prime_field_arithmetic() -> None:
    half = GF7("1/2")
    assert GF7.to_str(half) == "4"
    assert GF7.to_str(GF7(-1)) == "6"
    with pytest.raises(PreconditionError):
        GF7.from_rational(1, 7)


# 多项式


def test_canonical_format_orders_by_degree_then_lex() -> None:
    f = P("x2*x1 + x1*x2 - 3")
    assert format_poly(f) == "-3 + x1*x2 + x2*x1"
    assert format_poly(NcPoly.zero()) == "0"
    assert format_poly(P("2x1 - 1/2 x2")) == "2*x1 - 1/2*x2"


def test_format_parses_back(random_poly) -> None:
    for _ in range(10):
        f = random_poly()
        assert P(format_poly(f)) == f


def test_parse_juxtaposition_and_powers() -> None:
    assert P("x1x2") == P("x1*x2")
    assert P("(x1 + x2)^2") == P("x1*x1 + x1*x2 + x2*x1 + x2*x2")
    assert P("x1^0") == NcPoly.one()
    assert P("e1_2_1") == NcPoly.var(entry(1, 2, 1))


def test_commutator_text() -> None:
    assert P("[x1,x2]") == P("x1*x2 - x2*x1")
    assert P("[x1,x2,x3]") == gen_commutator([P("x1"), P("x2"), P("x3")])


def test_parse_error_carries_position() -> None:
    with pytest.raises(ParseError) as info:
        P("x1 + (x2")
    assert info.value.position >= 0


def test_parse_var() -> None:
    assert parse_var("x3") == x(3)
    assert parse_var("z1") == z(1)
    assert parse_var("e1_2_2") == entry(1, 2, 2)
    with pytest.raises(ParseError):
        parse_var("x1*x2")


def test_prime_field_coefficients_reduce() -> None:
    assert P("x1 + x1", GF2).is_zero()
    assert P("x1*x2 - x2*x1", GF2) == P("x1*x2 + x2*x1", GF2)


def test_degree_and_variables() -> None:
    f = P("x3*x1 + 2")
    assert f.degree() == 2
    assert f.variables() == (x(1), x(3))
    assert NcPoly.zero().degree() is None


def test_negative_power_is_rejected() -> None:
    with pytest.raises(PreconditionError):
        P("x1") ** -1


def test_field_mismatch() -> None:
    with pytest.raises(FieldMismatchError):
        P("x1") + P("x1", GF7)


def test_substitute() -> None:
    f = P("x1*x2")
    assert substitute(f, {x(1): P("x2 + 1")}) == P("x2*x2 + x2")
    assert substitute(f, {}) == f


def test_substitute_composes(random_poly) -> None:
    sigma = {x(1): P("x2"), x(2): P("x3")}
    tau = {x(2): P("x1 + x3"), x(3): P("x1")}
    for _ in range(5):
        f = random_poly()
        composed = {v: substitute(sigma.get(v, NcPoly.var(v)), tau) for v in f.variables()}
        assert substitute(substitute(f, sigma), tau) == substitute(f, composed)


def test_homogeneous_parts() -> None:
    f = P("x1 + x1*x2 + z1*x1")
    assert homogeneous_part(f, 2) == P("x1*x2 + z1*x1")
    assert homogeneous_part(f, 1, Grading.z_degree) == P("z1*x1")
    assert homogeneous_part(f, 0, Grading.z_degree) == P("x1 + x1*x2")


def test_multihomogeneous_components() -> None:
    components = multihomogeneous_components(P("x1*x2 + x2*x1 + x1*x1"))
    assert components == [P("x1*x2 + x2*x1"), P("x1*x1")]


# 标准多项式与交换子


def test_standard_polynomial() -> None:
    s4 = standard_poly([x(1), x(2), x(3), x(4)])
    assert len(s4) == 24
    assert s4.coefficient((x(1), x(2), x(3), x(4))) == QQ_FIELD(1)
    assert s4.coefficient((x(2), x(1), x(3), x(4))) == QQ_FIELD(-1)
    assert standard_poly([x(1), x(2)]) == P("[x1,x2]")


def test_standard_polynomial_cap() -> None:
    with pytest.raises(CapExceededError):
        standard_poly([x(i) for i in range(1, 5)], cap=3)


def test_standard_of_polynomial_arguments() -> None:
    args = [P("x1 + x2"), P("x3"), P("x1*x2")]
    expected = substitute(standard_poly([x(1), x(2), x(3)]), {x(1): args[0], x(2): args[1], x(3): args[2]})
    assert standard_of(args) == expected


def test_standard_vanishes_on_dependent_arguments() -> None:
    # 线性相关的参数使交错多项式为零
    assert standard_of([P("x1"), P("x2"), P("x1 + 2*x2")]).is_zero()


def test_gen_commutator_needs_two_arguments() -> None:
    with pytest.raises(PreconditionError):
        gen_commutator([P("x1")])
    assert gen_commutator([P("x1"), P("x2"), P("x3")]) == P("x1*x2*x3 - x2*x1*x3 - x3*x1*x2 + x3*x2*x1")


def test_bracket_map() -> None:
    assert bracket_map(P("x1*z1*x2")) == P("z1*x2*x1")
    assert bracket_map(P("z1*x1 + x2*z1")) == P("z1*x1 + z1*x2")
    assert bracket_map(P("z1*z2 + x1")).is_zero()


def test_combine() -> None:
    assert combine([P("x1"), P("x2*x1")]) == P("z1*x1 + z2*x2*x1")
    with pytest.raises(PreconditionError):
        combine([P("z1")])


def test_multilinearize() -> None:
    assert multilinearize(P("x1*x1")) == [P("x1*x2 + x2*x1")]
    assert multilinearize(P("x1*x2")) == [P("x1*x2")]
    with pytest.raises(PreconditionError):
        multilinearize(P("x1*x1", GF7))


def test_is_multilinear_and_rename() -> None:
    f = P("[x1,x2]")
    assert is_multilinear(f, [x(1), x(2)])
    assert not is_multilinear(f, [x(1), x(2), x(3)])
    assert not is_multilinear(P("x1*x1"), [x(1)])
    assert rename_variables(f, {x(1): x(3)}) == P("[x3,x2]")


# 随机性质


def test_ring_laws(random_poly) -> None:
    one, zero = NcPoly.one(), NcPoly.zero()
    for _ in range(1000):
        f, g, h = random_poly(), random_poly(), random_poly()
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h
        assert f * one == f == one * f
        assert f + zero == f
        assert (f - f).is_zero()


def test_standard_vanishes_on_a_constant_argument(random_poly, rng) -> None:
    for case in range(100):
        d = 1 + case % 3
        args = [random_poly(n_vars=3, max_degree=2 if d < 3 else 1, terms=2) for _ in range(2 * d)]
        args[int(rng.integers(0, 2 * d))] = P(str(int(rng.integers(1, 10))))
        assert standard_of(args).is_zero()


def test_standard_vanishes_on_linearly_dependent_arguments(random_poly, rng) -> None:
    for case in range(100):
        n = 2 + case % 3
        args = [random_poly(n_vars=3, max_degree=2, terms=2) for _ in range(n - 1)]
        i, j = (int(k) for k in rng.integers(0, n - 1, size=2))
        args.append(int(rng.integers(-3, 4)) * args[i] + int(rng.integers(-3, 4)) * args[j])
        assert standard_of(args).is_zero()


def test_bracket_map_is_linear(random_poly, rng) -> None:
    z1, z2 = P("z1"), P("z2")
    for _ in range(100):
        f = random_poly() * z1 * random_poly() + random_poly()
        g = random_poly() * z2 * random_poly() + random_poly() * z1
        alpha, beta = (int(k) for k in rng.integers(-5, 6, size=2))
        assert bracket_map(alpha * f + beta * g) == alpha * bracket_map(f) + beta * bracket_map(g)


def test_bracket_map_drops_other_z_degrees(random_poly) -> None:
    z1, z2 = P("z1"), P("z2")
    for _ in range(100):
        f = random_poly() + random_poly() * z1 * random_poly() * z2 + z2 * random_poly() * z2
        assert bracket_map(f).is_zero()
