from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from corpus import OPERATORS
from fockspace.dsl import ParseError, format_operator, parse_operator, parse_state
from fockspace.fock import (
    AdjBy,
    Compose,
    Dgen,
    E,
    F,
    Hgen,
    Identity,
    MulBy,
    Scale,
    Sum,
    TwistAdjBy,
    TwistMulBy,
    evaluate,
    vacuum,
)
from fockspace.symfunc import Basis, SymElt, e, h, p, s


# --- states ----------------------------------------------------------------------------

def test_state_examples():
    assert parse_state("s[]") == SymElt.one()
    got = parse_state("s[2,1] - 1/2*p[2]")
    assert got.basis is Basis.SCHUR
    assert got == s(2, 1) - Fraction(1, 2) * (s(2) - s(1, 1))
    with pytest.raises(ParseError, match="weakly decreasing"):
        parse_state("s[1,2]")


def test_state_single_basis_kept():
    assert parse_state("p[2] + 3*p[1,1]") == p(2) + 3 * p(1, 1)
    assert parse_state("h[2]").basis is Basis.COMPLETE


def test_state_zero_and_signs():
    assert parse_state("0") == SymElt.zero()
    assert parse_state("-s[1]") == -1 * s(1)
    assert parse_state("s[1] - s[1]") == SymElt.zero()
    assert parse_state("  e[ 2 , 1 ]  ") == e(2, 1)


@pytest.mark.parametrize("text,pos", [
    ("s[2,0]", 0), ("s[2,", 4), ("q[1]", 0), ("s[1] s[2]", 5), ("s[1/2]", 2),
    ("s[1]+", 5), ("2*", 2), ("", 0),
])
def test_state_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_state(text)
    assert info.value.pos == pos
    assert f"position {pos}" in str(info.value)


# --- operators -------------------------------------------------------------------------

def test_operator_examples():
    assert parse_operator("e_0*f_0 - f_0*e_0") == Sum((
        Compose(E(0), F(0)), Scale(-1, Compose(F(0), E(0))),
    ))
    assert parse_operator("adj(h[1])*mul(e[2])") == Compose(AdjBy(h(1)), MulBy(e(2)))
    op = parse_operator("tmul(e[1])")
    assert op == TwistMulBy(e(1))
    with pytest.raises(ValueError):
        evaluate(op, vacuum(), 0)


def test_leaves():
    assert parse_operator("d") == Dgen()
    assert parse_operator("id") == Identity()
    assert parse_operator("h_-2") == Hgen(-2)
    assert parse_operator("tadj(h[2])") == TwistAdjBy(h(2))


def test_composition_is_left_associative():
    assert parse_operator("f_0*f_1*f_2") == Compose(Compose(F(0), F(1)), F(2))


def test_scalars_fold():
    assert parse_operator("2*3*f_0") == Scale(6, F(0))
    assert parse_operator("-1/2*e_1") == Scale(Fraction(-1, 2), E(1))
    assert parse_operator("f_0*2") == Scale(2, F(0))
    assert parse_operator("-(f_0)") == Scale(-1, F(0))


@pytest.mark.parametrize("text,pos", [
    ("e_", 0), ("f_0 *", 5), ("(f_0", 4), ("e_0 f_0", 4),
    ("dd", 0), ("mul(x[1])", 4), ("f_0 + + f_1", 6), ("mul(s[1,3])", 4),
])
def test_operator_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_operator(text)
    assert info.value.pos == pos


def test_corpus_is_large_enough():
    assert len(OPERATORS) >= 50
    assert len(set(OPERATORS)) == len(OPERATORS)


@pytest.mark.parametrize("text", OPERATORS)
def test_round_trip_corpus(text):
    tree = parse_operator(text)
    printed = format_operator(tree)
    assert parse_operator(printed) == tree
    assert format_operator(parse_operator(printed)) == printed


# --- generated trees ---------------------------------------------------------------------

_states = st.sampled_from([s(1), s(2, 1), e(2), h(1), p(2) - 2 * p(1, 1), SymElt.one()])
_leaves = st.one_of(
    st.builds(E, st.integers(-3, 3)),
    st.builds(F, st.integers(-3, 3)),
    st.builds(Hgen, st.integers(-3, 3)),
    st.just(Dgen()),
    st.just(Identity()),
    st.builds(MulBy, _states),
    st.builds(AdjBy, _states),
    st.builds(TwistMulBy, _states),
    st.builds(TwistAdjBy, _states),
)
_coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(lambda c: c != 0)


def _extend(children):
    return st.one_of(
        st.builds(Compose, children, children),
        st.builds(lambda xs: Sum(tuple(xs)), st.lists(children, min_size=2, max_size=3)),
        st.builds(Scale, _coeffs, children),
    )


trees = st.recursive(_leaves, _extend, max_leaves=8)


def _semantics(tree, v, pp):
    try:
        return evaluate(tree, v, pp)
    except ValueError as exc:
        return type(exc)


@given(trees)
def test_print_parse_preserves_meaning(tree):
    again = parse_operator(format_operator(tree))
    printed = format_operator(again)
    assert parse_operator(printed) == again
    assert format_operator(again) == printed
    v = s(2, 1) + s(1)
    assert _semantics(again, v, 2) == _semantics(tree, v, 2)


def test_unclosed_call_names_the_paren():
    with pytest.raises(ParseError, match=r"expected '\+', '-' or '\)' at position 8"):
        parse_operator("mul(s[1]")
