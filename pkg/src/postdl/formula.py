"""Formula ASTs over a declared connective set, with a prefix-text grammar.

Grammar (UTF-8 text):

    formula := VAR | "(" CONN formula* ")"
    VAR     := [A-Za-z][A-Za-z0-9_]*      (user variables; "_"-prefixed names
                                           are reserved for generated fresh
                                           variables and rejected unless
                                           allow_reserved is set)

Constants are 0-ary connective applications, e.g. ``(top)``; there is no
separate constant node kind.  Formulas are immutable and structurally
hashable, so every operation here is safe to run concurrently on shared
inputs.
"""

from __future__ import annotations

import re
from typing import Iterator, Sequence

from .boolfun import BoolFun, signature_map
from .errors import (
    ArityMismatch,
    EmptyArgs,
    FormulaSyntaxError,
    TooManyVariables,
    UnboundVariable,
    UnknownConnective,
)

VAR_CAP = 20  # hard cap on truth-table construction, 2**20 rows

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class Formula:
    """Base class; instances are Var or App."""

    __slots__ = ("_hash",)

    def __hash__(self):
        return self._hash


class Var(Formula):
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name
        object.__setattr__(self, "_hash", hash(("v", name)))

    def __setattr__(self, key, value):
        if hasattr(self, "name") and key != "_hash":
            raise AttributeError("Var is immutable")
        object.__setattr__(self, key, value)

    def __eq__(self, other):
        return isinstance(other, Var) and self.name == other.name

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Var({self.name!r})"


class App(Formula):
    __slots__ = ("conn", "args")

    def __init__(self, conn: BoolFun, args: Sequence[Formula] = ()):
        args = tuple(args)
        if len(args) != conn.arity:
            raise ArityMismatch(
                f"connective {conn.name!r} expects {conn.arity} arguments, got {len(args)}"
            )
        object.__setattr__(self, "conn", conn)
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "_hash", hash(("a", conn.name, conn.arity, conn.bits, args)))

    def __setattr__(self, key, value):
        raise AttributeError("App is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, App)
            and self.conn == other.conn
            and self.args == other.args
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"App({self.conn.name}, {list(self.args)!r})"


def subformulas(phi: Formula) -> Iterator[Formula]:
    """All subtrees of phi, outermost first."""
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, App):
            stack.extend(reversed(node.args))


def variables(phi: Formula) -> set[str]:
    return {node.name for node in subformulas(phi) if isinstance(node, Var)}


def connectives(phi: Formula) -> set[BoolFun]:
    return {node.conn for node in subformulas(phi) if isinstance(node, App)}


def node_count(phi: Formula) -> int:
    return sum(1 for _ in subformulas(phi))


def serialize(phi: Formula) -> str:
    """Canonical prefix text; parse(serialize(phi)) reproduces phi."""
    if isinstance(phi, Var):
        return phi.name
    parts = [phi.conn.name] + [serialize(a) for a in phi.args]
    return "(" + " ".join(parts) + ")"


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens: list[tuple[str, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            tokens.append((ch, i))
            i += 1
        else:
            m = _NAME_RE.match(text, i)
            if not m:
                raise FormulaSyntaxError(f"unexpected character {ch!r}", i)
            tokens.append((m.group(), i))
            i = m.end()
    return tokens


def parse(text: str, signature, allow_reserved: bool = False) -> Formula:
    """Parse prefix-notation text against a connective signature.

    ``signature`` is an iterable or mapping of BoolFun.  Variable names
    starting with "_" are reserved for machine-generated formulas and only
    accepted with allow_reserved=True (the theory-file reader sets it, so
    reduction outputs round-trip).
    """
    sig = signature_map(signature)
    tokens = _tokenize(text)
    pos = 0

    def need(what: str) -> tuple[str, int]:
        nonlocal pos
        if pos >= len(tokens):
            raise FormulaSyntaxError(f"unexpected end of input, expected {what}", len(text))
        tok = tokens[pos]
        pos += 1
        return tok

    def formula() -> Formula:
        nonlocal pos
        tok, at = need("a variable or '('")
        if tok == ")":
            raise FormulaSyntaxError("unexpected ')'", at)
        if tok != "(":
            if tok.startswith("_") and not allow_reserved:
                raise FormulaSyntaxError(
                    f"variable {tok!r} uses the reserved '_' prefix", at
                )
            return Var(tok)
        name, at = need("a connective name")
        if name in "()":
            raise FormulaSyntaxError("expected a connective name after '('", at)
        conn = sig.get(name)
        if conn is None:
            raise UnknownConnective(f"unknown connective {name!r}", at)
        args: list[Formula] = []
        while True:
            if pos >= len(tokens):
                raise FormulaSyntaxError("missing ')'", len(text))
            if tokens[pos][0] == ")":
                pos += 1
                break
            args.append(formula())
        if len(args) != conn.arity:
            raise ArityMismatch(
                f"connective {name!r} expects {conn.arity} arguments, got {len(args)}", at
            )
        return App(conn, args)

    result = formula()
    if pos != len(tokens):
        raise FormulaSyntaxError("trailing input after formula", tokens[pos][1])
    return result


def evaluate(phi: Formula, assignment: dict[str, int]) -> int:
    """Evaluate phi bottom-up under a total assignment."""
    if isinstance(phi, Var):
        try:
            return assignment[phi.name] & 1
        except KeyError:
            raise UnboundVariable(f"variable {phi.name!r} not assigned") from None
    return phi.conn.value(tuple(evaluate(a, assignment) for a in phi.args))


def _var_pattern(j: int, n: int) -> int:
    """Truth-table int of variable j among n variables (j zero-based, LSB first)."""
    rows = 1 << n
    period = 1 << (j + 1)
    block = ((1 << (1 << j)) - 1) << (1 << j)
    reps = ((1 << rows) - 1) // ((1 << period) - 1)
    return block * reps


def table_int(phi: Formula, var_order: Sequence[str]) -> int:
    """Truth table of phi over var_order packed into an int (bit i = row i).

    Row i assigns var_order[j] the bit (i >> j) & 1, so var_order[0] is the
    least significant position, matching the BoolFun convention.
    """
    n = len(var_order)
    if n > VAR_CAP:
        raise TooManyVariables(f"{n} variables exceed the cap of {VAR_CAP}")
    index = {name: j for j, name in enumerate(var_order)}
    rows = 1 << n
    full = (1 << rows) - 1

    def walk(node: Formula) -> int:
        if isinstance(node, Var):
            try:
                return _var_pattern(index[node.name], n)
            except KeyError:
                raise UnboundVariable(
                    f"variable {node.name!r} not in var_order"
                ) from None
        conn = node.conn
        args = [walk(a) for a in node.args]
        out = 0
        for r in range(conn.n_points):
            if not conn.value_at(r):
                continue
            term = full
            for j, t in enumerate(args):
                term &= t if (r >> j) & 1 else ~t & full
            out |= term
            if out == full:
                break
        return out

    return walk(phi)


def truth_table_of(phi: Formula, var_order: Sequence[str], name: str = "f") -> BoolFun:
    """Brute-force truth table of phi over var_order as a BoolFun.

    This is the oracle backbone: every fragment engine is checked against
    tables produced here.
    """
    missing = variables(phi) - set(var_order)
    if missing:
        raise UnboundVariable(f"vars {sorted(missing)} not in var_order")
    bits = table_int(phi, var_order)
    rows = 1 << len(var_order)
    table = "".join("1" if (bits >> i) & 1 else "0" for i in range(rows))
    return BoolFun(name, len(var_order), table)


def substitute(phi: Formula, alpha: Formula, beta: Formula) -> Formula:
    """phi with every occurrence of the subtree alpha replaced by beta.

    Replacement is syntactic, outermost-first and non-overlapping: a
    replaced occurrence is not rescanned.
    """
    if phi == alpha:
        return beta
    if isinstance(phi, Var):
        return phi
    new_args = tuple(substitute(a, alpha, beta) for a in phi.args)
    if new_args == phi.args:
        return phi
    return App(phi.conn, new_args)


def balanced_composition(op: BoolFun, args: Sequence[Formula]) -> Formula:
    """Combine args under a binary associative op as a balanced tree.

    Depth is ceil(log2(len(args))); the truth table equals the left fold,
    which is what makes the log-depth re-bracketing of long chains sound.
    """
    if op.arity != 2:
        raise ArityMismatch(f"balanced composition needs a binary op, got {op.name!r}")
    args = list(args)
    if not args:
        raise EmptyArgs("cannot compose zero arguments")

    def build(lo: int, hi: int) -> Formula:
        if hi - lo == 1:
            return args[lo]
        mid = lo + (hi - lo + 1) // 2
        return App(op, (build(lo, mid), build(mid, hi)))

    return build(0, len(args))


def depth(phi: Formula) -> int:
    if isinstance(phi, Var) or not phi.args:
        return 0
    return 1 + max(depth(a) for a in phi.args)


def fresh_name(base: str, taken: set[str]) -> str:
    """A reserved-prefix name not colliding with taken (nor valid user input)."""
    cand = f"_{base}"
    k = 0
    while cand in taken:
        k += 1
        cand = f"_{base}{k}"
    return cand
