import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistforge.coeff import ONE, qpow
from twistforge.expr import (
    BinOp,
    Call,
    EvalError,
    ExprSyntaxError,
    Neg,
    Num,
    Pow,
    Sym,
    UnknownGenerator,
    evaluate,
    parse_expr,
    parse_scalar,
    to_source,
)
from twistforge.hopf import TSeries, coproduct, q_exp_series
from twistforge.qgroups import quantum_group

A2 = quantum_group("A", 2)


def test_q_commutator_ast():
    node = parse_expr("e1*e2 - q*e2*e1")
    assert node == BinOp(
        "-",
        BinOp("*", Sym("e1"), Sym("e2")),
        BinOp("*", BinOp("*", Sym("q"), Sym("e2")), Sym("e1")),
    )


def test_qexp_node():
    node = parse_expr("qexp(q^2; t/(1-q^2); e1)")
    assert isinstance(node, Call) and node.name == "qexp" and len(node.args) == 3
    assert node.args[0] == Pow(Sym("q"), 2)
    assert node.args[2] == Sym("e1")


def test_syntax_error_position():
    with pytest.raises(ExprSyntaxError) as exc:
        parse_expr("e1 ox")
    assert exc.value.position == 6


@pytest.mark.parametrize("src", ["(e1", "e1 +* e2", "qexp(q; e1)", "e1^x", "3 $ 4", ""])
def test_malformed_inputs_raise(src):
    with pytest.raises(ExprSyntaxError):
        parse_expr(src)


def test_evaluate_composite():
    v = evaluate("e1*e2 - q*e2*e1", A2.hopf)
    assert v.coeff(0) == A2.pres.gen("e_11")


def test_evaluate_coproduct():
    v = evaluate("coproduct(e1)", A2.hopf)
    assert v.coeff(0) == coproduct(A2.pres.gen("e1"), A2.hopf)


def test_evaluate_qexp():
    v = evaluate("qexp(q^2; t/(1-q^2); e1)", A2.hopf, 3)
    want = q_exp_series(A2.pres.gen("e1"), 2, (ONE - qpow(2)).inv(), 3)
    assert not any(v.residual_counts(want))


def test_qexp_needs_t():
    with pytest.raises(EvalError):
        evaluate("qexp(q^2; 1/(1-q^2); e1)", A2.hopf, 2)


def test_unknown_generator():
    with pytest.raises(UnknownGenerator) as exc:
        evaluate("e1 + e9", A2.hopf)
    assert exc.value.position == 6


def test_parse_scalar():
    assert parse_scalar("(q^2-1)/(q-1)") == qpow(1) + ONE
    assert parse_scalar("q^-2") == qpow(-2)


# round trip

NAMES = st.sampled_from(["e1", "e2", "f1", "k1", "q", "t", "X"])


def _trees():
    leaves = st.one_of(st.builds(Num, st.integers(0, 20)), st.builds(Sym, NAMES))

    def extend(children):
        return st.one_of(
            st.builds(BinOp, st.sampled_from(["+", "-", "*", "/", "ox"]), children, children),
            st.builds(Neg, children),
            st.builds(Pow, children, st.integers(-3, 4)),
            st.builds(lambda a: Call("coproduct", (a,)), children),
            st.builds(lambda a, b, c: Call("qexp", (a, b, c)), children, children, children),
        )

    return st.recursive(leaves, extend, max_leaves=12)


@given(_trees())
def test_print_parse_round_trip(tree):
    src = to_source(tree)
    assert parse_expr(src) == tree
    assert to_source(parse_expr(src)) == src
