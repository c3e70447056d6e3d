"""Entailment A |= phi for formula sets, with polynomial fragment engines.

The truth-table check is the reference oracle.  When every connective is
linear the premises become GF(2) equations and entailment is Gaussian
elimination; when every connective is conjunction-like (or
disjunction-like) each formula normalizes to bottom, top, or a set of
variables and entailment is containment bookkeeping.  Engine "auto"
selects the cheapest sound engine from the signature; premises that mix
conjunction and disjunction stay on the oracle.

Entailment is classical: inconsistent premises imply everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .boolfun import BoolFun, signature_map
from .clones import subset_of_clone
from .errors import NotAffine, ShapeMismatch, TooManyVariables
from .formula import Formula, connectives, table_int, variables

_ENGINES = ("auto", "oracle", "affine", "conjunctive", "disjunctive")


@dataclass(frozen=True)
class ImplicationQuery:
    premises: tuple[Formula, ...]
    goal: Formula
    signature: frozenset[BoolFun]

    def decide(self, engine: str = "auto") -> bool:
        return implies(list(self.premises), self.goal, self.signature, engine)


def joint_variables(premises: Iterable[Formula], goal: Formula | None = None) -> list[str]:
    vs: set[str] = set()
    for p in premises:
        vs |= variables(p)
    if goal is not None:
        vs |= variables(goal)
    return sorted(vs)


def truth_table_implies(premises: Sequence[Formula], goal: Formula) -> bool:
    """Exhaustive oracle: every joint assignment satisfying all premises
    satisfies the goal.  Vacuously true on unsatisfiable premises."""
    order = joint_variables(premises, goal)
    rows = 1 << len(order)
    full = (1 << rows) - 1
    prem = full
    for p in premises:
        prem &= table_int(p, order)
        if prem == 0:
            return True
    return prem & ~table_int(goal, order) & full == 0


def linear_row(phi: Formula, index: dict[str, int]) -> tuple[int, int]:
    """Encode a linear formula as the GF(2) equation (mask, rhs):
    xor of the masked variables equals rhs.  Asserting phi means asserting
    phi = 1, i.e. xor(S) = 1 xor c for phi = c xor xor(S)."""
    order = sorted(variables(phi))
    if len(order) > 20:
        raise TooManyVariables(f"formula has {len(order)} variables")
    bits = table_int(phi, order)
    c = bits & 1
    mask_local = 0
    for j in range(len(order)):
        if ((bits >> (1 << j)) & 1) ^ c:
            mask_local |= 1 << j
    # verify linearity at every point
    rows = 1 << len(order)
    for i in range(rows):
        acc = c ^ (bin(i & mask_local).count("1") & 1)
        if acc != ((bits >> i) & 1):
            raise NotAffine("formula is not a linear (xor/constant) function")
    mask = 0
    for j, name in enumerate(order):
        if (mask_local >> j) & 1:
            mask |= 1 << index[name]
    return mask, c ^ 1


@dataclass
class AffineSystem:
    """GF(2) equations (variable mask, right-hand bit) over an ordered
    variable universe, kept in row-reduced form; each row came from one
    linear premise asserted true."""

    order: list[str]
    pivots: list[tuple[int, int]]
    inconsistent: bool

    @staticmethod
    def from_formulas(premises: Sequence[Formula], order: Sequence[str]) -> "AffineSystem":
        index = {name: j for j, name in enumerate(order)}
        system = AffineSystem(list(order), [], False)
        for p in premises:
            system.add_row(*linear_row(p, index))
        return system

    def _reduce(self, mask: int, rhs: int) -> tuple[int, int]:
        for pmask, prhs in self.pivots:
            if mask & pmask & -pmask:  # pivot bit set in mask
                mask ^= pmask
                rhs ^= prhs
        return mask, rhs

    def add_row(self, mask: int, rhs: int) -> None:
        mask, rhs = self._reduce(mask, rhs)
        if mask:
            self.pivots.append((mask, rhs))
            self.pivots.sort(key=lambda r: r[0] & -r[0])
        elif rhs:
            self.inconsistent = True

    def entails(self, mask: int, rhs: int) -> bool:
        if self.inconsistent:
            return True
        mask, rhs = self._reduce(mask, rhs)
        return mask == 0 and rhs == 0


def affine_implies(premises: Sequence[Formula], goal: Formula) -> bool:
    """Entailment between linear formulas by GF(2) elimination: true iff
    the premise system is inconsistent or the goal's equation lies in the
    row span (constants tracked as an augmented column)."""
    order = joint_variables(premises, goal)
    system = AffineSystem.from_formulas(premises, order)
    index = {name: j for j, name in enumerate(order)}
    return system.entails(*linear_row(goal, index))


def normalize_flat(phi: Formula, shape: str):
    """Normalize an E-formula (shape="and") or V-formula (shape="or") to
    "top", "bot", or the frozenset of its essential variables.

    Computed from the truth table, not syntax, so redundant nesting like
    or(x, x) collapses.
    """
    order = sorted(variables(phi))
    if len(order) > 20:
        raise TooManyVariables(f"formula has {len(order)} variables")
    bits = table_int(phi, order)
    rows = 1 << len(order)
    full = (1 << rows) - 1
    if bits == 0:
        return "bot"
    if bits == full:
        return "top"
    ess: set[str] = set()
    for j, name in enumerate(order):
        half = 0
        for i in range(rows):
            if not (i >> j) & 1 and ((bits >> i) & 1) != ((bits >> (i | 1 << j)) & 1):
                half = 1
                break
        if half:
            ess.add(name)
    index = {name: j for j, name in enumerate(order)}
    for i in range(rows):
        if shape == "and":
            expect = all((i >> index[v]) & 1 for v in ess)
        else:
            expect = any((i >> index[v]) & 1 for v in ess)
        if bool((bits >> i) & 1) != expect:
            raise ShapeMismatch(f"formula is not a pure {shape}-of-variables shape")
    return frozenset(ess)


def conjunctive_implies(premises: Sequence[Formula], goal: Formula) -> bool:
    """Entailment for conjunction-shaped formulas: the premises jointly
    force the union of their variable sets."""
    norms = [normalize_flat(p, "and") for p in premises]
    if "bot" in norms:
        return True
    g = normalize_flat(goal, "and")
    if g == "top":
        return True
    if g == "bot":
        return False
    forced: set[str] = set()
    for n in norms:
        if n != "top":
            forced |= n
    return g <= forced


def disjunctive_implies(premises: Sequence[Formula], goal: Formula) -> bool:
    """Entailment for disjunction-shaped formulas: some premise's variable
    set must be contained in the goal's."""
    norms = [normalize_flat(p, "or") for p in premises]
    if "bot" in norms:
        return True
    g = normalize_flat(goal, "or")
    if g == "top":
        return True
    if g == "bot":
        return False
    return any(n != "top" and n <= g for n in norms)


def select_engine(signature) -> str:
    """Cheapest sound engine for the signature: affine, conjunctive, or
    disjunctive fragments when the clone analysis licenses them, otherwise
    the truth-table oracle.  Monotone signatures with both conjunction and
    disjunction deliberately stay on the oracle."""
    if subset_of_clone(signature, "L"):
        return "affine"
    if subset_of_clone(signature, "E"):
        return "conjunctive"
    if subset_of_clone(signature, "V"):
        return "disjunctive"
    return "oracle"


def implies(
    premises: Sequence[Formula],
    goal: Formula,
    signature=None,
    engine: str = "auto",
) -> bool:
    """Decide whether the premises entail the goal.

    With engine="auto" the signature (derived from the formulas when not
    given) picks the fragment engine; explicit engines skip the analysis
    but still verify their shape preconditions.
    """
    if engine not in _ENGINES:
        raise ValueError(f"unknown implication engine {engine!r}")
    if engine == "auto":
        if signature is None:
            sig: set[BoolFun] = set()
            for f in list(premises) + [goal]:
                sig |= connectives(f)
            signature = sig
        engine = select_engine(signature_map(signature))
    if engine == "oracle":
        return truth_table_implies(premises, goal)
    if engine == "affine":
        return affine_implies(premises, goal)
    if engine == "conjunctive":
        return conjunctive_implies(premises, goal)
    return disjunctive_implies(premises, goal)
