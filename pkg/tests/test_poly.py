"""Polynomial kernel: ring laws, orders, text format, exact division helpers."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from birot4.poly import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    RationalFunction,
    eliminate_linear,
    evaluate_rational,
    exact_divide,
    format_polynomial,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    parse_polynomial,
    primitive_normalize,
    substitute_even_powers,
    variables,
)

XYZ = variables("x", "y", "z")


def _symbols():
    return (Polynomial.variable(XYZ, n) for n in ("x", "y", "z"))


def _random_poly(rng, max_terms=6, max_exp=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = tuple(rng.randint(0, max_exp) for _ in range(3))
        terms[mono] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return Polynomial(XYZ, terms)


def test_variable_set_rejects_duplicates():
    with pytest.raises(ValueError):
        variables("x", "x")


def test_variable_set_lookup():
    assert XYZ.index("y") == 1
    with pytest.raises(KeyError):
        XYZ.index("w")
    assert XYZ.unit("z") == (0, 0, 1)


def test_monomial_helpers():
    assert monomial_divides((1, 0, 2), (2, 0, 2))
    assert not monomial_divides((1, 1, 0), (2, 0, 2))
    assert monomial_div((2, 3, 1), (1, 1, 0)) == (1, 2, 1)
    with pytest.raises(ValueError):
        monomial_div((1, 0, 0), (2, 0, 0))
    assert monomial_lcm((2, 0, 1), (1, 3, 1)) == (2, 3, 1)


def test_zero_coefficients_are_dropped():
    x, y, _ = _symbols()
    f = x * y - x * y
    assert f.is_zero()
    assert f.terms == {}


def test_ring_laws_on_random_samples():
    """Distributivity, associativity, and the binomial square."""
    rng = random.Random(11)
    for _ in range(40):
        f, g, h = (_random_poly(rng) for _ in range(3))
        assert (f + g) * h == f * h + g * h
        assert (f * g) * h == f * (g * h)
        assert (f + g) ** 2 == f * f + 2 * f * g + g * g
        assert f - f == Polynomial.zero(XYZ)


def test_integer_and_fraction_scalars_mix_in():
    x, y, _ = _symbols()
    f = 2 * x + y * Fraction(1, 3) - 1
    assert f.coefficient((1, 0, 0)) == 2
    assert f.coefficient((0, 1, 0)) == Fraction(1, 3)
    assert f.coefficient((0, 0, 0)) == -1
    assert f == Fraction(1, 3) * y + x + x - 1


def test_power_matches_repeated_multiplication():
    rng = random.Random(12)
    f = _random_poly(rng, max_terms=4, max_exp=2)
    product = Polynomial.constant(XYZ, 1)
    for k in range(5):
        assert f ** k == product
        product = product * f
    with pytest.raises(ValueError):
        f ** -1


def test_lex_and_grevlex_disagree_where_expected():
    # x versus y^2: lex ranks by the first variable, grevlex by total degree
    a, b = (1, 0, 0), (0, 2, 0)
    assert LEX.compare(a, b) == 1
    assert GREVLEX.compare(a, b) == -1
    # ties in total degree break on the rightmost difference: y^2 > y*z
    c = (0, 1, 1)
    assert LEX.compare(b, c) == 1
    assert GREVLEX.compare(b, c) == 1
    assert GREVLEX.compare((0, 0, 2), c) == -1  # z^2 < y*z


def test_monomial_order_validation_and_equality():
    with pytest.raises(ValueError):
        MonomialOrder("weird")
    assert MonomialOrder("lex") == LEX
    assert LEX != GREVLEX


def test_leading_data_and_degrees():
    x, y, z = _symbols()
    f = 3 * x * z ** 2 + y ** 4
    assert f.leading_monomial(LEX) == (1, 0, 2)
    assert f.leading_coefficient(LEX) == 3
    assert f.leading_monomial(GREVLEX) == (0, 4, 0)
    assert f.total_degree() == 4
    assert f.degree_in("z") == 2
    assert Polynomial.zero(XYZ).total_degree() == -1
    with pytest.raises(ValueError):
        Polynomial.zero(XYZ).leading_monomial(LEX)


def test_constant_queries():
    f = Polynomial.constant(XYZ, Fraction(5, 7))
    assert f.is_constant()
    assert f.constant_value() == Fraction(5, 7)
    x = Polynomial.variable(XYZ, "x")
    assert not x.is_constant()
    with pytest.raises(ValueError):
        x.constant_value()


def test_partial_derivative_leibniz_property():
    rng = random.Random(13)
    for _ in range(20):
        f, g = _random_poly(rng), _random_poly(rng)
        lhs = (f * g).partial_derivative("y")
        rhs = f.partial_derivative("y") * g + f * g.partial_derivative("y")
        assert lhs == rhs


def test_evaluate_matches_substitute_with_constants():
    rng = random.Random(14)
    point = {"x": Fraction(2, 3), "y": Fraction(-1), "z": Fraction(5)}
    for _ in range(20):
        f = _random_poly(rng)
        substituted = f.substitute(point)
        assert substituted.is_constant()
        assert substituted.constant_value() == f.evaluate(point)


def test_substitute_composition():
    x, y, z = _symbols()
    f = x * x + y * z
    g = f.substitute({"x": y + z})
    assert g == (y + z) ** 2 + y * z
    missing = variables("a", "b")
    with pytest.raises(KeyError):
        f.substitute({"x": Polynomial.variable(missing, "a")}, into=missing)


def test_format_parse_round_trip_random():
    rng = random.Random(15)
    for _ in range(60):
        f = _random_poly(rng)
        assert parse_polynomial(format_polynomial(f), XYZ) == f
        assert parse_polynomial(format_polynomial(f, GREVLEX), XYZ) == f


def test_parse_accepts_flexible_spelling():
    x, y, z = _symbols()
    f = parse_polynomial("-x + 2*y^3 - 1/2*z + 4", XYZ)
    assert f == -x + 2 * y ** 3 - Fraction(1, 2) * z + 4
    shuffled = parse_polynomial("4- 1/2*z+2*y^3 -x", XYZ)
    assert shuffled == f
    with pytest.raises(ValueError):
        parse_polynomial("x + q", XYZ)
    with pytest.raises(ValueError):
        parse_polynomial("", XYZ)


def test_format_examples_are_canonical():
    x, y, z = _symbols()
    f = -x * x + Fraction(3, 2) * y - z
    assert format_polynomial(f) == "-x^2 + 3/2*y - z"
    assert format_polynomial(Polynomial.zero(XYZ)) == "0"


def test_primitive_normalize_properties():
    rng = random.Random(16)
    for _ in range(30):
        f = _random_poly(rng)
        norm, scalar = primitive_normalize(f)
        assert norm == f * scalar
        if f.is_zero():
            assert scalar == 1
            continue
        assert norm.leading_coefficient(LEX) > 0
        denominators = {c.denominator for c in norm.terms.values()}
        assert denominators == {1}
        from math import gcd
        content = 0
        for c in norm.terms.values():
            content = gcd(content, abs(c.numerator))
        assert content == 1
        # rescaling does not change the normal form
        again, _ = primitive_normalize(f * Fraction(-7, 11))
        assert again == norm or again == -norm


def test_primitive_normalize_detects_proportionality():
    x, y, _ = _symbols()
    f = 6 * x - 4 * y
    g = Fraction(-9, 2) * x + 3 * y
    assert primitive_normalize(f)[0] == primitive_normalize(g)[0]


def test_exact_divide_round_trip():
    rng = random.Random(17)
    done = 0
    while done < 25:
        f, g = _random_poly(rng), _random_poly(rng)
        if g.is_zero():
            continue
        assert exact_divide(f * g, g) == f
        done += 1


def test_exact_divide_rejects_non_multiples():
    x, y, _ = _symbols()
    with pytest.raises(ValueError):
        exact_divide(x * x + y, x + 1)
    with pytest.raises(ZeroDivisionError):
        exact_divide(x, Polynomial.zero(XYZ))


def test_eliminate_linear_is_a_scaled_substitution():
    """den^d * f with v -> -num/den equals the eliminated polynomial."""
    rng = random.Random(18)
    vars4 = variables("v", "x", "y", "z")
    for _ in range(15):
        terms = {}
        for _ in range(rng.randint(1, 6)):
            mono = tuple(rng.randint(0, 2) for _ in range(4))
            terms[mono] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        f = Polynomial(vars4, terms)
        den = Polynomial.variable(vars4, "x") + 2
        num = Polynomial.variable(vars4, "y") * 3 - 1
        out = eliminate_linear(f, "v", den, num)
        assert out.degree_in("v") <= 0
        image = RationalFunction(-num, den)
        bindings = {"v": image}
        for name in ("x", "y", "z"):
            bindings[name] = RationalFunction(Polynomial.variable(vars4, name))
        d = max(f.degree_in("v"), 0)
        lhs = evaluate_rational(f, bindings, vars4) * RationalFunction(den ** d)
        assert lhs == RationalFunction(out)


def test_eliminate_linear_rejects_self_reference():
    x, y, _ = _symbols()
    with pytest.raises(ValueError):
        eliminate_linear(x * y, "x", x + 1, y)


def test_substitute_even_powers():
    x, y, _ = _symbols()
    f = x ** 4 * y + 2 * x ** 2 - 5
    image = y + 1
    assert substitute_even_powers(f, "x", image) == image ** 2 * y + 2 * image - 5
    with pytest.raises(ValueError):
        substitute_even_powers(x ** 3, "x", image)


def test_rational_function_equality_is_cross_multiplied():
    x, y, _ = _symbols()
    a = RationalFunction(x * y, y)
    b = RationalFunction(x * x, x)
    assert a == b
    assert a == RationalFunction(x)
    assert a != RationalFunction(y)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(x, Polynomial.zero(XYZ))


def test_rational_function_field_laws():
    x, y, z = _symbols()
    a = RationalFunction(x + 1, y)
    b = RationalFunction(z, x + 2)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a - a == RationalFunction(Polynomial.zero(XYZ))
    assert 1 / (a / a) == 1
    with pytest.raises(ZeroDivisionError):
        a / RationalFunction(Polynomial.zero(XYZ), y)


def test_evaluate_rational_on_a_known_quotient():
    x, y, _ = _symbols()
    f = x * x - y
    point = {"x": RationalFunction(y, x), "y": RationalFunction(Polynomial.constant(XYZ, 2))}
    value = evaluate_rational(f, point, XYZ)
    assert value == RationalFunction(y * y - 2 * x * x, x * x)
