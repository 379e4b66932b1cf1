"""Generating-function expression parsing, formatting, and expansion."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hankelrev import (
    BinOp,
    GfParseError,
    Lit,
    Pow,
    PowerSeries,
    Sqrt,
    Var,
    eval_gf,
    expand_gf,
    format_gf,
    parse_gf,
)


class TestParse:
    def test_precedence(self):
        assert parse_gf("1+2*x^2") == BinOp(
            "+", Lit(1), BinOp("*", Lit(2), Pow(Var(), 2))
        )

    def test_parenthesized_base(self):
        assert parse_gf("(1+x)^2") == Pow(BinOp("+", Lit(1), Var()), 2)

    def test_left_associativity(self):
        assert parse_gf("1-x-x^2") == BinOp(
            "-", BinOp("-", Lit(1), Var()), Pow(Var(), 2)
        )

    def test_leading_minus_desugars_to_subtraction(self):
        assert parse_gf("-x") == BinOp("-", Lit(0), Var())
        assert parse_gf("-x+1") == BinOp("+", BinOp("-", Lit(0), Var()), Lit(1))

    def test_sqrt(self):
        assert parse_gf("sqrt(1-4*x)") == Sqrt(
            BinOp("-", Lit(1), BinOp("*", Lit(4), Var()))
        )

    def test_unicode_minus_is_plain_minus(self):
        assert parse_gf("1−x") == parse_gf("1-x")

    @pytest.mark.parametrize(
        "text,offset,message",
        [
            ("x^", 2, "exponent must be a non-negative integer literal"),
            ("x^-1", 2, "exponent must be a non-negative integer literal"),
            ("(1+x", 4, "expected ')'"),
            (")", 0, "expected a value, found ')'"),
            ("x x", 2, "unexpected trailing input 'x'"),
            ("y", 0, "unknown identifier 'y'"),
            ("1//x", 2, "expected a value, found '/'"),
            # offsets count bytes, and U+2212 is three of them
            ("1−y", 4, "unknown identifier 'y'"),
        ],
    )
    def test_syntax_errors_carry_byte_offsets(self, text, offset, message):
        with pytest.raises(GfParseError) as exc:
            parse_gf(text)
        assert exc.value.offset == offset
        assert str(exc.value) == f"syntax error at offset {offset}: {message}"

    def test_ast_validation(self):
        with pytest.raises(ValueError, match="literals are non-negative"):
            Lit(-1)
        with pytest.raises(ValueError, match="exponent must be a non-negative integer"):
            Pow(Var(), -2)


class TestFormat:
    @pytest.mark.parametrize(
        "text,formatted",
        [
            ("x/(1-3*x-5*x^2)", "x/(1-3*x-5*x^2)"),
            ("(1-sqrt(1-4*x))/2", "(1-sqrt(1-4*x))/2"),
            ("-x+1", "0-x+1"),
            ("(1+x)^2*(1-x)", "(1+x)^2*(1-x)"),
            ("2*x-x^2", "2*x-x^2"),
        ],
    )
    def test_known_forms(self, text, formatted):
        assert format_gf(parse_gf(text)) == formatted


def gf_expressions():
    atoms = st.one_of(st.integers(0, 9).map(Lit), st.just(Var()))

    def extend(children):
        binops = st.tuples(
            st.sampled_from("+-*/"), children, children
        ).map(lambda t: BinOp(*t))
        pows = st.tuples(children, st.integers(0, 4)).map(lambda t: Pow(*t))
        return st.one_of(binops, pows, children.map(Sqrt))

    return st.recursive(atoms, extend, max_leaves=16)


class TestRoundtrip:
    @given(gf_expressions())
    def test_parse_inverts_format(self, expression):
        assert parse_gf(format_gf(expression)) == expression


class TestExpand:
    def test_rational(self):
        s = expand_gf("x/(1-3*x-5*x^2)", 5)
        assert s.integer_coefficients() == [0, 1, 3, 14, 57, 241]

    def test_catalan_radical(self):
        s = expand_gf("(1-sqrt(1-4*x))/2", 6)
        assert s.integer_coefficients() == [0, 1, 1, 2, 5, 14, 42]

    def test_catalan_radical_with_series_divisor(self):
        s = expand_gf("(1-sqrt(1-4*x))/(2*x)", 4)
        assert s.integer_coefficients() == [1, 1, 2, 5, 14]

    def test_radical_over_negative_monomial(self):
        # numerator valuation 2, divisor valuation 1: quotient still reaches
        # the requested order because evaluation widens its working precision
        s = expand_gf("(1+3*x-sqrt(1+6*x+29*x^2))/(-10*x)", 5)
        assert s.integer_coefficients() == [0, 1, -3, 4, 18, -139]

    def test_monomial_cancellation(self):
        assert expand_gf("x/x", 3).integer_coefficients() == [1, 0, 0, 0]
        assert expand_gf("x^2/x", 3).integer_coefficients() == [0, 1, 0, 0]

    def test_scalar_division_keeps_rationals(self):
        assert expand_gf("1/2/2", 2)[0] == Fraction(1, 4)

    def test_power_binds_tighter_than_product(self):
        assert expand_gf("2*x^2", 2).integer_coefficients() == [0, 0, 2]
        assert expand_gf("(2*x)^2", 2).integer_coefficients() == [0, 0, 4]

    def test_eval_accepts_ast(self):
        assert eval_gf(parse_gf("1+x"), 2).integer_coefficients() == [1, 1, 0]

    def test_division_by_pure_zero_series_fails(self):
        with pytest.raises(ValueError, match="non-invertible series"):
            expand_gf("x/(x-x)", 3)

    def test_division_by_higher_valuation_fails(self):
        with pytest.raises(ValueError, match="non-invertible series"):
            expand_gf("1/x", 4)

    def test_sqrt_requires_unit_constant(self):
        with pytest.raises(ValueError, match="sqrt requires unit constant term"):
            expand_gf("sqrt(2+x)", 3)

    def test_order_must_be_non_negative(self):
        with pytest.raises(ValueError, match="order must be non-negative"):
            expand_gf("x", -1)

    @given(gf_expressions(), st.integers(0, 6))
    def test_expansion_when_defined_is_exact_at_low_order(self, expression, order):
        # whichever expressions evaluate must produce a series of the
        # requested order; the rest must fail loudly, never silently truncate
        try:
            series = eval_gf(expression, order)
        except ValueError:
            return
        assert series.order == order
