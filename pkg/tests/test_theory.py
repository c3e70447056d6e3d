import random

from postdl.boolfun import BUILTINS
from postdl.engine import enumerate_extensions
from postdl.formula import App, Var, connectives, parse
from postdl.gen import random_formula
from postdl.theory import DefaultRule, DefaultTheory, eliminate_constant_true

B = BUILTINS


def f(text):
    return parse(text, B, allow_reserved=True)


def test_make_dedupes_w_and_infers_signature():
    t = DefaultTheory.make([f("x"), f("x"), f("(and x y)")], [])
    assert len(t.W) == 2
    assert t.signature == frozenset({B["and"]})


def test_eliminate_top_only_w():
    t = DefaultTheory.make([f("(top)")], [], [B["top"]])
    out = eliminate_constant_true(t)
    assert out.W == (Var("_t"),)
    assert B["top"] not in out.signature


def test_eliminate_no_top_unchanged():
    t = DefaultTheory.make([f("x")], [], [B["or"]])
    assert eliminate_constant_true(t) is t


def test_eliminate_rule():
    t = DefaultTheory.make(
        [], [DefaultRule(f("(top)"), f("x"), f("x"))], [B["top"]]
    )
    out = eliminate_constant_true(t)
    assert out.W == (Var("_t"),)
    assert out.D[0].prerequisite == Var("_t")
    assert out.D[0].justification == Var("x")


def test_eliminate_nested_top():
    t = DefaultTheory.make([f("(or x (top))")], [], [B["or"], B["top"]])
    out = eliminate_constant_true(t)
    assert out.W[0] == f("(or x _t)")
    assert Var("_t") in out.W
    for g in out.all_formulas():
        assert B["top"] not in connectives(g)


def test_eliminate_fresh_name_avoids_collision():
    # a previous elimination may already have produced _t
    t = DefaultTheory.make(
        [Var("_t")], [DefaultRule(f("(top)"), Var("x"), Var("x"))], [B["top"]]
    )
    out = eliminate_constant_true(t)
    assert out.D[0].prerequisite == Var("_t1")
    assert Var("_t1") in out.W and Var("_t") in out.W


def _random_top_theory(rng):
    conns = [B[n] for n in ("and", "or", "not", "top")]
    pool = [f"v{i}" for i in range(1, rng.randint(2, 5))]
    w = [random_formula(rng, conns, pool, 2) for _ in range(rng.randint(0, 2))]
    rules = [
        DefaultRule(
            random_formula(rng, conns, pool, 2),
            random_formula(rng, conns, pool, 2),
            random_formula(rng, conns, pool, 2),
        )
        for _ in range(rng.randint(1, 4))
    ]
    # force at least one top occurrence
    rules.append(DefaultRule(App(B["top"]), Var(pool[0]), Var(pool[0])))
    return DefaultTheory.make(w, rules, conns)


def test_elimination_preserves_extension_witnesses():
    # the stable consequent subsets of input and output correspond
    # one-to-one under the substitution (checked by enumeration)
    rng = random.Random(5)
    for _ in range(30):
        t = _random_top_theory(rng)
        out = eliminate_constant_true(t)
        before, _ = enumerate_extensions(t)
        after, _ = enumerate_extensions(out)
        assert [e.conseq_mask for e in before] == [e.conseq_mask for e in after]
        assert [e.generating for e in before] == [e.generating for e in after]


def test_make_rejects_understated_signature():
    import pytest
    from postdl.errors import InputError

    with pytest.raises(InputError):
        DefaultTheory.make([f("(not x)")], [], [B["or"]])
