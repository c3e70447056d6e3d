import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from postdl.boolfun import BUILTINS, BoolFun
from postdl.errors import (
    ArityMismatch,
    EmptyArgs,
    FormulaSyntaxError,
    TooManyVariables,
    UnboundVariable,
    UnknownConnective,
)
from postdl.formula import (
    App,
    Var,
    balanced_composition,
    depth,
    evaluate,
    fresh_name,
    parse,
    serialize,
    substitute,
    truth_table_of,
    variables,
)

SIG = BUILTINS


def f(text):
    return parse(text, SIG)


# -- parsing ---------------------------------------------------------------


def test_parse_basic():
    phi = f("(and x y)")
    assert phi == App(BUILTINS["and"], (Var("x"), Var("y")))


def test_parse_arity_mismatch():
    with pytest.raises(ArityMismatch):
        f("(and x)")


def test_parse_unknown_connective():
    with pytest.raises(UnknownConnective):
        f("(nand x y)")


def test_parse_custom_connective():
    s10 = BoolFun("s10c", 3, "00010101")
    phi = parse("(s10c x y z)", {"s10c": s10})
    assert isinstance(phi, App) and phi.conn.arity == 3


@pytest.mark.parametrize("bad", ["", "(and x y", ")", "(and x y) z", "(and (x) y)", "( )"])
def test_parse_syntax_errors(bad):
    with pytest.raises(FormulaSyntaxError):
        f(bad)


def test_parse_reserved_prefix():
    with pytest.raises(FormulaSyntaxError):
        f("_t")
    assert parse("_t", SIG, allow_reserved=True) == Var("_t")


def test_parse_positions_reported():
    try:
        f("(and x (nope y z))")
    except UnknownConnective as exc:
        assert exc.position == 8
    else:
        pytest.fail("expected UnknownConnective")


# -- evaluation ------------------------------------------------------------


def test_eval_examples():
    assert evaluate(f("(and x y)"), {"x": 1, "y": 0}) == 0
    assert evaluate(f("(xor x x)"), {"x": 0}) == 0
    assert evaluate(f("(xor x x)"), {"x": 1}) == 0
    assert evaluate(f("(s10 x y z)"), {"x": 1, "y": 1, "z": 0}) == 1


def test_eval_unbound():
    with pytest.raises(UnboundVariable):
        evaluate(f("(and x y)"), {"x": 1})


# -- truth tables ----------------------------------------------------------


def test_truth_table_identity():
    assert truth_table_of(f("x"), ["x"]).table == "01"
    assert truth_table_of(f("(not x)"), ["x"]).table == "10"


def test_truth_table_s00_shape():
    # brute-force derived: index i assigns x=bit0, y=bit1, z=bit2
    tt = truth_table_of(f("(or x (and y z))"), ["x", "y", "z"])
    assert tt.table[0] == "0"
    assert tt.table[1] == "1"
    assert tt.table[6] == "1"
    brute = "".join(
        str(((i >> 0) & 1) | (((i >> 1) & 1) & ((i >> 2) & 1))) for i in range(8)
    )
    assert tt.table == brute == "01010111"


def test_truth_table_matches_pointwise_eval():
    phi = f("(or (and x (not y)) (xor z (imp x y)))")
    order = ["x", "y", "z"]
    tt = truth_table_of(phi, order)
    for i in range(8):
        sigma = {v: (i >> j) & 1 for j, v in enumerate(order)}
        assert int(tt.table[i]) == evaluate(phi, sigma)


def test_truth_table_var_cap():
    order = [f"v{i}" for i in range(21)]
    with pytest.raises(TooManyVariables):
        truth_table_of(f("v0"), order)


def test_truth_table_missing_var():
    with pytest.raises(UnboundVariable):
        truth_table_of(f("(and x y)"), ["x"])


# -- substitution ----------------------------------------------------------


def test_substitute_examples():
    assert substitute(f("(and x y)"), f("x"), f("z")) == f("(and z y)")
    assert substitute(f("x"), f("y"), f("z")) == f("x")
    assert substitute(f("(top)"), f("(top)"), Var("t")) == Var("t")


def test_substitute_outermost_first():
    # replacing (and x x) inside (and (and x x) (and x x)) hits both outer
    # occurrences and does not rescan the replacement
    phi = f("(and (and x x) (and x x))")
    got = substitute(phi, f("(and x x)"), f("x"))
    assert got == f("(and x x)")


# -- hypothesis strategies ---------------------------------------------------

_names = st.sampled_from(["x", "y", "z", "u", "v"])
_conns = st.sampled_from([BUILTINS[n] for n in ("and", "or", "not", "xor", "imp", "top", "bot", "maj")])


def _formulas(max_depth=4):
    return st.recursive(
        _names.map(Var),
        lambda kids: st.builds(
            lambda c, args: App(c, tuple(args[: c.arity])),
            _conns,
            st.lists(kids, min_size=3, max_size=3),
        ),
        max_leaves=12,
    )


@given(_formulas())
@settings(max_examples=150, deadline=None)
def test_roundtrip_parse_serialize(phi):
    assert parse(serialize(phi), SIG) == phi


@given(_formulas())
@settings(max_examples=100, deadline=None)
def test_serialize_parse_canonical(phi):
    text = serialize(phi)
    assert serialize(parse(text, SIG)) == text


@given(_formulas(), _formulas())
@settings(max_examples=100, deadline=None)
def test_substitute_self_is_identity(phi, alpha):
    assert substitute(phi, alpha, alpha) == phi


# -- balanced composition ----------------------------------------------------


def test_balanced_single():
    assert balanced_composition(BUILTINS["or"], [Var("a")]) == Var("a")


def test_balanced_four_shape():
    got = balanced_composition(BUILTINS["or"], [Var(c) for c in "abcd"])
    assert got == f("(or (or a b) (or c d))")
    assert depth(got) == 2


def test_balanced_empty():
    with pytest.raises(EmptyArgs):
        balanced_composition(BUILTINS["or"], [])


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("op", ["and", "or", "xor"])
def test_balanced_semantics_equals_fold(op, n):
    args = [Var(f"a{i}") for i in range(n)]
    bal = balanced_composition(BUILTINS[op], args)
    fold = args[0]
    for a in args[1:]:
        fold = App(BUILTINS[op], (fold, a))
    order = [f"a{i}" for i in range(n)]
    assert truth_table_of(bal, order).table == truth_table_of(fold, order).table
    assert depth(bal) <= math.ceil(math.log2(n)) if n > 1 else depth(bal) == 0


def test_fresh_name_avoids_taken():
    assert fresh_name("t", set()) == "_t"
    assert fresh_name("t", {"_t"}) == "_t1"
    assert fresh_name("t", {"_t", "_t1"}) == "_t2"


def test_variables():
    assert variables(f("(or x (and y x))")) == {"x", "y"}
