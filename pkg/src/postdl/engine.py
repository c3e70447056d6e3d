"""Decision engines for extension existence, credulous and skeptical
reasoning over a default theory.

The generic engine enumerates candidate extensions and doubles as the
brute-force oracle: by the generating-defaults characterization, every
stable extension is axiomatized by the facts plus a subset of the distinct
rule consequents, so enumeration runs over consequent subsets (ascending
popcount, then index), not over raw rule subsets.  The specialized engines
implement the polynomial and iterative procedures the clone analysis
licenses: the monotone fixpoint computation, the justification-free
iteration for 1-reproducing signatures, subset enumeration with fragment
implication for affine signatures, and graph reachability for
projection-like signatures.

Justification tests ("not beta" must stay out of the extension) are always
evaluated semantically: against a consistent candidate they reduce to
joint satisfiability with beta, which the truth-table context decides even
when negation is not in the signature.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .clones import CloneReport, dispatch_case, subset_of_clone
from .errors import (
    DefaultCountTooLarge,
    EngineCloneMismatch,
    InputError,
    RuleCountTooLarge,
    TooManyVariables,
)
from .formula import VAR_CAP, Formula, Var, table_int, variables
from .implication import (
    affine_implies,
    conjunctive_implies,
    disjunctive_implies,
    select_engine,
    truth_table_implies,
)
from .theory import DefaultTheory

PROBLEMS = ("ext", "cred", "skep")
GENERIC_CONSEQUENT_CAP = 20
POLY_RULE_CAP = 10_000

_OVERRIDE_LABELS = {
    "generic": "generic",
    "monotone": "monotone_iterative",
    "r1": "r1_unique",
    "affine": "affine_guess",
    "reachability": "reachability",
}

_SOUNDNESS = {
    "monotone_iterative": "M",
    "r1_unique": "R1",
    "affine_guess": "L",
    "reachability": "I",
}


@dataclass
class Stats:
    subsets_checked: int = 0
    implication_calls: int = 0

    def to_json(self) -> dict:
        return {
            "subsets_checked": self.subsets_checked,
            "implication_calls": self.implication_calls,
        }


@dataclass(frozen=True)
class ExtensionWitness:
    """Generating defaults of a stable extension, as indices into D."""

    generating: tuple[int, ...]
    inconsistent: bool = False

    def to_json(self):
        return {"generating": list(self.generating), "inconsistent": self.inconsistent}


@dataclass(frozen=True)
class Decision:
    problem: str
    answer: bool
    engine: str
    case: str
    witness: ExtensionWitness | None
    stats: Stats

    def to_json(self) -> dict:
        return {
            "problem": self.problem,
            "answer": self.answer,
            "engine": self.engine,
            "case": self.case,
            "witness": list(self.witness.generating) if self.witness else None,
            "witness_inconsistent": self.witness.inconsistent if self.witness else None,
            "stats": self.stats.to_json(),
        }


class TableContext:
    """Shared truth tables for all formulas of one decision instance.

    Tables are ints with bit i giving the value at joint assignment i;
    var_order[0] is the least significant position.
    """

    def __init__(self, theory: DefaultTheory, extra: Iterable[Formula] = ()):
        vs = theory.variables()
        extra = tuple(extra)
        for f in extra:
            vs |= variables(f)
        self.order = sorted(vs)
        if len(self.order) > VAR_CAP:
            raise TooManyVariables(
                f"instance has {len(self.order)} variables, cap is {VAR_CAP}"
            )
        self.rows = 1 << len(self.order)
        self.full = (1 << self.rows) - 1
        self._memo: dict[int, tuple[Formula, int]] = {}

    def table(self, phi: Formula) -> int:
        hit = self._memo.get(id(phi))
        if hit is not None:
            return hit[1]
        bits = table_int(phi, self.order)
        self._memo[id(phi)] = (phi, bits)
        return bits

    def and_of(self, formulas: Iterable[Formula]) -> int:
        bits = self.full
        for f in formulas:
            bits &= self.table(f)
        return bits


class _Implier:
    """Implication callable bound to one engine run; oracle mode shares the
    run's truth-table context, fragment modes go formula-level."""

    def __init__(self, stats: Stats, mode: str, ctx: TableContext | None):
        self.mode = mode
        self.stats = stats
        self.ctx = ctx

    def __call__(self, premises: Sequence[Formula], goal: Formula) -> bool:
        self.stats.implication_calls += 1
        if self.mode == "oracle":
            prem = self.ctx.and_of(premises)
            return prem & ~self.ctx.table(goal) & self.ctx.full == 0
        if self.mode == "affine":
            return affine_implies(premises, goal)
        if self.mode == "conjunctive":
            return conjunctive_implies(premises, goal)
        if self.mode == "disjunctive":
            return disjunctive_implies(premises, goal)
        return truth_table_implies(premises, goal)


def _ones(phi: Formula) -> int:
    """Value of phi under the all-ones assignment; for monotone formulas
    this decides equivalence to the constant 0."""
    if isinstance(phi, Var):
        return 1
    return phi.conn.value(tuple(_ones(a) for a in phi.args))


def is_consistent_W(theory: DefaultTheory) -> bool:
    """Satisfiability of the facts.  1-reproducing signatures shortcut to
    True (the all-ones assignment is always a model)."""
    if subset_of_clone(theory.signature, "R1"):
        return True
    ctx = TableContext(theory)
    return ctx.and_of(theory.W) != 0


# ---------------------------------------------------------------------------
# stable-extension checking


def _stable_via_tables(
    ctx: TableContext,
    theory: DefaultTheory,
    ehat_forms: Sequence[Formula],
    stats: Stats,
) -> tuple[bool, tuple[int, ...]]:
    """Oracle-side stability of Th(W + candidate consequents)."""
    w_and = ctx.and_of(theory.W)
    ehat = ctx.and_of(ehat_forms)
    if ehat == 0:
        return w_and == 0, ()
    gens = w_and
    applied: set[int] = set()
    changed = True
    while changed:
        changed = False
        for i, d in enumerate(theory.D):
            if i in applied:
                continue
            stats.implication_calls += 2
            if ehat & ctx.table(d.justification) == 0:
                continue
            if gens & ~ctx.table(d.prerequisite) & ctx.full:
                continue
            applied.add(i)
            gens &= ctx.table(d.consequent)
            changed = True
    stats.implication_calls += 2
    return gens == ehat, tuple(sorted(applied))


def _stable_via_fragments(
    ctx: TableContext,
    theory: DefaultTheory,
    ehat_conseqs: Sequence[Formula],
    implier: _Implier,
    stats: Stats,
) -> tuple[bool, tuple[int, ...]]:
    """Stability with fragment implication on the prerequisite side; the
    justification side stays on truth tables."""
    ehat_forms = list(theory.W) + list(ehat_conseqs)
    ehat = ctx.and_of(ehat_forms)
    if ehat == 0:
        return ctx.and_of(theory.W) == 0, ()
    gens = list(theory.W)
    applied: set[int] = set()
    changed = True
    while changed:
        changed = False
        for i, d in enumerate(theory.D):
            if i in applied:
                continue
            stats.implication_calls += 1
            if ehat & ctx.table(d.justification) == 0:
                continue
            if not implier(gens, d.prerequisite):
                continue
            applied.add(i)
            gens.append(d.consequent)
            changed = True
    f_conseqs = [theory.D[i].consequent for i in sorted(applied)]
    if set(f_conseqs) == set(ehat_conseqs):
        return True, tuple(sorted(applied))
    both = all(implier(gens, e) for e in ehat_conseqs) and all(
        implier(ehat_forms, f) for f in f_conseqs
    )
    return both, tuple(sorted(applied))


def check_stable(theory: DefaultTheory, generating: Iterable[int], use_fragments: bool = False) -> bool:
    """Does the rule subset G generate a stable extension, i.e. is
    Th(W + concl(G)) a fixed point of the extension iteration?

    An unsatisfiable candidate is stable exactly when W itself is
    inconsistent (then the only extension is the set of all formulas).
    """
    idx = sorted(set(generating))
    if any(i < 0 or i >= len(theory.D) for i in idx):
        raise InputError("generating-default index out of range")
    conseqs = [theory.D[i].consequent for i in idx]
    stats = Stats()
    ctx = TableContext(theory)
    if use_fragments:
        mode = select_engine(theory.signature)
        implier = _Implier(stats, mode, ctx)
        ok, _ = _stable_via_fragments(ctx, theory, conseqs, implier, stats)
        return ok
    ok, _ = _stable_via_tables(ctx, theory, list(theory.W) + conseqs, stats)
    return ok


@dataclass(frozen=True)
class ExtensionInfo:
    """One stable extension found by enumeration: the consequent-subset
    mask, the canonical generating defaults, and the model set of its
    finite axiomatization (over the context's variable order)."""

    conseq_mask: int
    generating: tuple[int, ...]
    models: int


def _distinct_consequents(theory: DefaultTheory) -> list[Formula]:
    seen: dict[Formula, None] = {}
    for d in theory.D:
        seen.setdefault(d.consequent)
    return list(seen)


def enumerate_extensions(theory: DefaultTheory, goal: Formula | None = None) -> tuple[list[ExtensionInfo], TableContext]:
    """All stable extensions by consequent-subset enumeration (oracle side)."""
    conseqs = _distinct_consequents(theory)
    if len(conseqs) > GENERIC_CONSEQUENT_CAP:
        raise DefaultCountTooLarge(
            f"{len(conseqs)} distinct consequents exceed the enumeration cap "
            f"of {GENERIC_CONSEQUENT_CAP}"
        )
    ctx = TableContext(theory, [goal] if goal is not None else [])
    stats = Stats()
    out: list[ExtensionInfo] = []
    k = len(conseqs)
    for mask in sorted(range(1 << k), key=lambda m: (bin(m).count("1"), m)):
        chosen = [conseqs[j] for j in range(k) if (mask >> j) & 1]
        stable, applied = _stable_via_tables(ctx, theory, list(theory.W) + chosen, stats)
        if stable:
            out.append(ExtensionInfo(mask, applied, ctx.and_of(list(theory.W) + chosen)))
    return out, ctx


# ---------------------------------------------------------------------------
# engines


def _enumerate_engine(
    problem: str,
    theory: DefaultTheory,
    goal: Formula | None,
    stats: Stats,
    want_witness: bool,
    fragments: bool,
) -> tuple[bool, ExtensionWitness | None]:
    conseqs = _distinct_consequents(theory)
    if len(conseqs) > GENERIC_CONSEQUENT_CAP:
        raise DefaultCountTooLarge(
            f"{len(conseqs)} distinct consequents exceed the enumeration cap "
            f"of {GENERIC_CONSEQUENT_CAP}"
        )
    ctx = TableContext(theory, [goal] if goal is not None else [])
    implier = _Implier(stats, select_engine(theory.signature) if fragments else "oracle", ctx)
    w_unsat = ctx.and_of(theory.W) == 0
    k = len(conseqs)
    masks = sorted(range(1 << k), key=lambda m: (bin(m).count("1"), m))

    def stable_for(mask: int) -> tuple[bool, tuple[int, ...], list[Formula]]:
        chosen = [conseqs[j] for j in range(k) if (mask >> j) & 1]
        stats.subsets_checked += 1
        if fragments:
            ok, applied = _stable_via_fragments(ctx, theory, chosen, implier, stats)
        else:
            ok, applied = _stable_via_tables(ctx, theory, list(theory.W) + chosen, stats)
        return ok, applied, chosen

    def goal_holds(chosen: list[Formula]) -> bool:
        if w_unsat:
            return True
        return implier(list(theory.W) + chosen, goal)

    if problem == "ext":
        for mask in masks:
            ok, applied, _ = stable_for(mask)
            if ok:
                return True, ExtensionWitness(applied, inconsistent=w_unsat)
        return False, None

    if problem == "cred":
        for mask in masks:
            ok, applied, chosen = stable_for(mask)
            if ok and goal_holds(chosen):
                return True, ExtensionWitness(applied, inconsistent=w_unsat)
        return False, None

    # skep: vacuously true when no extension exists
    for mask in masks:
        ok, applied, chosen = stable_for(mask)
        if ok and not goal_holds(chosen):
            return False, ExtensionWitness(applied, inconsistent=w_unsat)
    return True, None


def _monotone_engine(
    problem: str,
    theory: DefaultTheory,
    goal: Formula | None,
    stats: Stats,
    want_witness: bool,
) -> tuple[bool, ExtensionWitness | None]:
    """Iterative fixpoint for monotone signatures: a rule fires when its
    prerequisite is implied and its justification is not equivalent to 0;
    an applicable rule concluding 0 refutes extension existence.  The
    not-equivalent-to-0 tests are the all-ones evaluations, exact for
    monotone formulas.  Inconsistent facts short-circuit: the theory then
    has the trivial extension."""
    if len(theory.D) > POLY_RULE_CAP:
        raise RuleCountTooLarge(f"more than {POLY_RULE_CAP} rules")
    if any(_ones(w) == 0 for w in theory.W):
        witness = ExtensionWitness((), inconsistent=True)
        return (True, witness) if problem != "skep" else (True, None)
    mode = select_engine(theory.signature)
    ctx = TableContext(theory, [goal] if goal is not None else []) if mode == "oracle" else None
    implier = _Implier(stats, mode, ctx)
    gens = list(theory.W)
    applied: set[int] = set()
    dead = [_ones(d.justification) == 0 for d in theory.D]
    changed = True
    while changed:
        changed = False
        for i, d in enumerate(theory.D):
            if i in applied or dead[i]:
                continue
            if not implier(gens, d.prerequisite):
                continue
            if _ones(d.consequent) == 0:
                if problem == "ext":
                    return False, None
                if problem == "cred":
                    return False, None
                return True, None
            applied.add(i)
            gens.append(d.consequent)
            changed = True
    witness = ExtensionWitness(tuple(sorted(applied)))
    if problem == "ext":
        return True, witness
    holds = implier(gens, goal)
    if problem == "cred":
        return holds, witness if holds else None
    return holds, None if holds else witness


def _r1_engine(
    problem: str,
    theory: DefaultTheory,
    goal: Formula | None,
    stats: Stats,
    want_witness: bool,
) -> tuple[bool, ExtensionWitness | None]:
    """Justification-free iteration for 1-reproducing signatures, which
    always yields the unique stable extension."""
    if len(theory.D) > POLY_RULE_CAP:
        raise RuleCountTooLarge(f"more than {POLY_RULE_CAP} rules")
    mode = select_engine(theory.signature)
    ctx = TableContext(theory, [goal] if goal is not None else []) if mode == "oracle" else None
    implier = _Implier(stats, mode, ctx)
    gens = list(theory.W)
    applied: set[int] = set()
    changed = True
    while changed:
        changed = False
        for i, d in enumerate(theory.D):
            if i in applied:
                continue
            if implier(gens, d.prerequisite):
                applied.add(i)
                gens.append(d.consequent)
                changed = True
    witness = ExtensionWitness(tuple(sorted(applied)))
    if problem == "ext":
        return True, witness
    holds = implier(gens, goal)
    if problem == "cred":
        return holds, witness if holds else None
    return holds, None if holds else witness


def unique_extension_r1(theory: DefaultTheory) -> ExtensionWitness:
    """Generating defaults of the unique stable extension of a theory over
    a 1-reproducing signature."""
    if not subset_of_clone(theory.signature, "R1"):
        raise EngineCloneMismatch("signature is not contained in the 1-reproducing clone")
    _, witness = _r1_engine("ext", theory, None, Stats(), True)
    return witness


def _norm_projection(phi: Formula) -> str:
    """Normalize a formula over a projection-or-constant signature to
    '1', '0', or a variable name."""
    if isinstance(phi, Var):
        return phi.name
    conn = phi.conn
    if conn.bits == 0:
        return "0"
    if conn.bits == (1 << conn.n_points) - 1:
        return "1"
    for j in range(conn.arity):
        if all(conn.value_at(i) == ((i >> j) & 1) for i in range(conn.n_points)):
            return _norm_projection(phi.args[j])
    raise EngineCloneMismatch(
        f"connective {conn.name!r} is neither constant nor a projection"
    )


def _reachability_engine(
    problem: str,
    theory: DefaultTheory,
    goal: Formula | None,
    stats: Stats,
    want_witness: bool,
) -> tuple[bool, ExtensionWitness | None]:
    """Graph search for projection-like signatures: facts hang off the
    true-node, a rule with live justification is an edge from its
    prerequisite to its consequent, and an extension exists exactly when
    the false-node is unreachable from the true-node."""
    if len(theory.D) > POLY_RULE_CAP:
        raise RuleCountTooLarge(f"more than {POLY_RULE_CAP} rules")
    norm_w = [_norm_projection(w) for w in theory.W]
    if "0" in norm_w:
        witness = ExtensionWitness((), inconsistent=True)
        if problem == "ext":
            return True, witness
        return True, None
    edges: dict[str, set[str]] = {}
    rule_nodes: list[tuple[str, str] | None] = []
    for d in theory.D:
        if _norm_projection(d.justification) == "0":
            rule_nodes.append(None)
            continue
        a, g = _norm_projection(d.prerequisite), _norm_projection(d.consequent)
        edges.setdefault(a, set()).add(g)
        rule_nodes.append((a, g))
    reach = {"1"}
    frontier = ["1"] + [w for w in norm_w if w != "1"]
    reach.update(frontier)
    while frontier:
        node = frontier.pop()
        for nxt in edges.get(node, ()):
            if nxt not in reach:
                reach.add(nxt)
                frontier.append(nxt)
    has_ext = "0" not in reach

    def witness_now() -> ExtensionWitness:
        gen = tuple(
            i for i, an in enumerate(rule_nodes) if an is not None and an[0] in reach
        )
        return ExtensionWitness(gen)

    if problem == "ext":
        return (True, witness_now()) if has_ext else (False, None)
    if not has_ext:
        return (False, None) if problem == "cred" else (True, None)
    g = _norm_projection(goal)
    holds = g == "1" or (g != "0" and g in reach)
    if problem == "cred":
        return holds, witness_now() if holds else None
    return holds, None if holds else witness_now()


def _trivial_engine(
    problem: str,
    theory: DefaultTheory,
    goal: Formula | None,
    stats: Stats,
    want_witness: bool,
) -> tuple[bool, ExtensionWitness | None]:
    if want_witness:
        _, witness = _r1_engine("ext", theory, None, stats, True)
        return True, witness
    return True, None


def _run_engine(
    label: str,
    problem: str,
    theory: DefaultTheory,
    goal: Formula | None,
    stats: Stats,
    want_witness: bool,
) -> tuple[bool, ExtensionWitness | None]:
    if label == "generic":
        return _enumerate_engine(problem, theory, goal, stats, want_witness, fragments=False)
    if label == "affine_guess":
        return _enumerate_engine(problem, theory, goal, stats, want_witness, fragments=True)
    if label == "monotone_iterative":
        return _monotone_engine(problem, theory, goal, stats, want_witness)
    if label == "r1_unique":
        return _r1_engine(problem, theory, goal, stats, want_witness)
    if label == "poly_fragment":
        if subset_of_clone(theory.signature, "M"):
            return _monotone_engine(problem, theory, goal, stats, want_witness)
        return _r1_engine(problem, theory, goal, stats, want_witness)
    if label == "reachability":
        return _reachability_engine(problem, theory, goal, stats, want_witness)
    if label == "trivial_yes":
        return _trivial_engine(problem, theory, goal, stats, want_witness)
    raise ValueError(f"unknown engine label {label!r}")


def decide(
    problem: str,
    theory: DefaultTheory,
    goal: Formula | None = None,
    engine: str = "auto",
    want_witness: bool = False,
    report: CloneReport | None = None,
) -> Decision:
    """Decide one of the three problems, with the engine chosen by the
    clone analysis unless overridden.  An override that is unsound for the
    signature is refused rather than silently wrong."""
    if problem not in PROBLEMS:
        raise InputError(f"unknown problem {problem!r}")
    if problem in ("cred", "skep") and goal is None:
        raise InputError(f"{problem} needs a goal formula")
    if report is None:
        report = dispatch_case(theory.signature)
    case = {"ext": report.ext_case, "cred": report.cred_case, "skep": report.skep_case}[problem]
    if engine == "auto":
        label = report.engines[problem]
    else:
        label = _OVERRIDE_LABELS.get(engine)
        if label is None:
            raise InputError(f"unknown engine {engine!r}")
        needed = _SOUNDNESS.get(label)
        if needed is not None and not subset_of_clone(theory.signature, needed):
            raise EngineCloneMismatch(
                f"engine {engine!r} requires the signature to stay within clone {needed}"
            )
    stats = Stats()
    answer, witness = _run_engine(label, problem, theory, goal, stats, want_witness)
    if not want_witness:
        witness = None
    return Decision(problem, answer, label, case, witness, stats)


def ext(theory: DefaultTheory, engine: str = "auto", want_witness: bool = False) -> Decision:
    return decide("ext", theory, None, engine, want_witness)


def cred(theory: DefaultTheory, goal: Formula, engine: str = "auto", want_witness: bool = False) -> Decision:
    return decide("cred", theory, goal, engine, want_witness)


def skep(theory: DefaultTheory, goal: Formula, engine: str = "auto", want_witness: bool = False) -> Decision:
    return decide("skep", theory, goal, engine, want_witness)
