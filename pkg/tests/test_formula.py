import pytest
from hypothesis import given
import hypothesis.strategies as st

from qlogic import rayset as rs
from qlogic.exactlin import Vector
from qlogic.formula import (
    Atom,
    Binary,
    Const,
    ContextError,
    FormulaSyntaxError,
    SemanticsError,
    UnboundAtomError,
    Unary,
    evaluate,
    parse,
    parse_context,
    to_text,
)
from qlogic.rayset import RaySet
from qlogic.subspace import Subspace, span

CTX_TEXT = """
space dim=2   # C^2
sub A = span((1, 0))
sub B = span((1, 1))
sub H = full
set SA = r(A)
set SB = r(B)
set U = SA | SB
"""


@pytest.fixture
def ctx():
    return parse_context(CTX_TEXT)


def test_parse_examples():
    assert parse("A & B | C") == Binary("|", Binary("&", Atom("A"), Atom("B")), Atom("C"))
    assert parse("A -> B -> C") == Binary("->", Atom("A"), Binary("->", Atom("B"), Atom("C")))
    assert parse("~!A") == Unary("~", Unary("!", Atom("A")))
    assert parse("(top)") == Const(True)
    assert parse("A | B | C") == Binary("|", Binary("|", Atom("A"), Atom("B")), Atom("C"))


@pytest.mark.parametrize("text, offset", [
    ("A &", 3), ("(A | B", 6), ("A B", 2), ("A $ B", 2), ("", 0), ("A -> ", 5),
])
def test_syntax_error_offsets(text, offset):
    with pytest.raises(FormulaSyntaxError) as exc:
        parse(text)
    assert exc.value.offset == offset


def test_canonical_text():
    assert to_text(parse("((A & B)) | (C)")) == "A & B | C"
    assert to_text(parse("(A -> B) -> C")) == "(A -> B) -> C"
    assert to_text(parse("A & (B | C)")) == "A & (B | C)"
    assert to_text(parse("A | (B | C)")) == "A | (B | C)"
    assert to_text(parse("~(A & B)")) == "~(A & B)"


names = st.sampled_from(["A", "B", "K1", "x_y'"])
asts = st.recursive(
    st.one_of(names.map(Atom), st.booleans().map(Const)),
    lambda sub: st.one_of(
        st.builds(Unary, st.sampled_from("~!"), sub),
        st.builds(Binary, st.sampled_from(["&", "|", "->"]), sub, sub),
    ),
    max_leaves=12,
)


@given(asts)
def test_parse_print_roundtrip(f):
    assert parse(to_text(f)) == f


def test_quantum_eval(ctx):
    assert evaluate("A | ~A", ctx, "quantum") == Subspace.full(2)
    assert evaluate("A & B", ctx, "quantum") == Subspace.zero(2)
    assert evaluate("A | B", ctx, "quantum") == Subspace.full(2)
    # A & (B | ~B) differs from (A & B) | (A & ~B)
    assert evaluate("A & (B | ~B)", ctx, "quantum") != evaluate("A & B | A & ~B", ctx, "quantum")


def test_weak_heyting_eval(ctx):
    top = RaySet.top(2)
    assert not rs.equals(evaluate("A | ~A", ctx, "weak-heyting"), top)
    assert rs.equals(evaluate("~~(A | ~A)", ctx, "weak-heyting"), top)
    assert rs.equals(evaluate("A -> bot", ctx, "weak-heyting"), evaluate("~A", ctx, "weak-heyting"))
    assert rs.equals(evaluate("U -> SA", ctx, "weak-heyting"),
                     rs.implies(ctx.sets["U"], ctx.sets["SA"]))
    assert rs.equals(evaluate("~U", ctx, "weak-heyting"), RaySet.empty(2))


def test_classical_eval(ctx):
    a = rs.embed_r(ctx.subs["A"])
    assert rs.equals(evaluate("A | !A", ctx, "classical"), RaySet.top(2))
    assert rs.equals(evaluate("A -> B", ctx, "classical"),
                     rs.union(rs.complement(a), rs.embed_r(ctx.subs["B"])))


@pytest.mark.parametrize("formula", ["A & B", "A | B", "(A | B) & H", "top & A | bot"])
def test_set_semantics_agree_without_negations(ctx, formula):
    assert rs.equals(evaluate(formula, ctx, "classical"), evaluate(formula, ctx, "weak-heyting"))


@pytest.mark.parametrize("formula, semantics", [
    ("!A", "quantum"), ("A -> B", "quantum"), ("!A", "weak-heyting"),
    ("~A", "classical"), ("SA", "quantum"), ("A", "intuitionistic"),
])
def test_semantics_rejection(ctx, formula, semantics):
    with pytest.raises(SemanticsError):
        evaluate(formula, ctx, semantics)


def test_unbound(ctx):
    with pytest.raises(UnboundAtomError):
        evaluate("A & Z", ctx, "weak-heyting")
    with pytest.raises(UnboundAtomError):
        evaluate("Z", ctx, "quantum")


def test_context_contents(ctx):
    assert ctx.ambient_dim == 2
    assert ctx.subs["B"] == span([Vector([1, 1])], 2)
    assert rs.equals(ctx.sets["U"], rs.union(ctx.sets["SA"], ctx.sets["SB"]))


@pytest.mark.parametrize("text", [
    "sub A = full",
    "space dim=2\nsub A = span((1, 0, 0))",
    "space dim=2\nsub A = full\nsub A = zero",
    "space dim=2\nset S = r(Q)",
    "space dim=2\nsub A = line((1, 0))",
    "space dim=2\nspace dim=3",
    "space dim=2\nsub top = full",
    "space dim=2\nset S = A &",
    "",
])
def test_context_errors(text):
    with pytest.raises(ContextError):
        parse_context(text)


def test_context_r_calls_inside_expressions():
    ctx = parse_context("space dim=2\nsub A = span((1, 0))\nset S = r(A) | ~r(A)\n")
    a = rs.embed_r(ctx.subs["A"])
    assert rs.equals(ctx.sets["S"], rs.union(a, rs.pseudo_neg(a)))
