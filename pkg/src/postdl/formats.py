"""Text formats: theory files, DIMACS CNF, edge lists, chain-CNF sections.

Theory file layout (lines; '#' starts a comment):

    defconn NAME ARITY BITSTRING     # optional custom connectives
    W:
    (and x y)                        # one formula per line
    D:
    (default PRE JUST CON)           # one rule per line
    goal: (or x y)                   # optional

The signature of the parsed theory is the declared custom connectives
plus the builtins actually used.  Machine-written files may contain
reserved "_"-prefixed variables (reductions generate them), so the reader
parses with allow_reserved.
"""

from __future__ import annotations

import re

from .boolfun import BUILTINS, BoolFun
from .errors import TheoryFormatError
from .formula import Formula, connectives, parse, serialize
from .reductions import CnfFormula, Digraph, Hypergraph, SnsatInstance
from .theory import DefaultRule, DefaultTheory


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _split_top_level(text: str, filename: str, lineno: int) -> list[str]:
    """Split a token sequence into top-level formula chunks (bare names or
    balanced parenthesized groups)."""
    chunks: list[str] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "(":
            depth = 0
            start = i
            while i < n:
                if text[i] == "(":
                    depth += 1
                elif text[i] == ")":
                    depth -= 1
                    if depth == 0:
                        i += 1
                        break
                i += 1
            if depth != 0:
                raise TheoryFormatError("unbalanced '('", filename, lineno)
            chunks.append(text[start:i])
        elif ch == ")":
            raise TheoryFormatError("unbalanced ')'", filename, lineno)
        else:
            m = re.match(r"[A-Za-z0-9_]+", text[i:])
            if not m:
                raise TheoryFormatError(f"unexpected character {ch!r}", filename, lineno)
            chunks.append(m.group())
            i += len(m.group())
    return chunks


def read_theory(text: str, filename: str = "<input>"):
    """Parse a theory file; returns (DefaultTheory, goal | None)."""
    declared: dict[str, BoolFun] = {}
    w_forms: list[Formula] = []
    rules: list[DefaultRule] = []
    goal: Formula | None = None
    section = None

    def sig():
        return {**BUILTINS, **declared}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        low = line.lower()
        if low.startswith("defconn"):
            parts = line.split()
            if len(parts) != 4:
                raise TheoryFormatError("defconn NAME ARITY BITSTRING", filename, lineno)
            name, arity_s, bits = parts[1], parts[2], parts[3]
            if name in BUILTINS:
                raise TheoryFormatError(f"cannot redefine builtin {name!r}", filename, lineno)
            try:
                declared[name] = BoolFun(name, int(arity_s), bits)
            except Exception as exc:
                raise TheoryFormatError(str(exc), filename, lineno) from None
            continue
        if low == "w:":
            section = "W"
            continue
        if low == "d:":
            section = "D"
            continue
        if low.startswith("goal:"):
            try:
                goal = parse(line[5:].strip(), sig(), allow_reserved=True)
            except Exception as exc:
                raise TheoryFormatError(str(exc), filename, lineno) from None
            continue
        if section == "W":
            try:
                w_forms.append(parse(line, sig(), allow_reserved=True))
            except Exception as exc:
                raise TheoryFormatError(str(exc), filename, lineno) from None
        elif section == "D":
            if not (line.startswith("(default") and line.endswith(")")):
                raise TheoryFormatError("rules look like (default PRE JUST CON)", filename, lineno)
            inner = line[len("(default") : -1]
            chunks = _split_top_level(inner, filename, lineno)
            if len(chunks) != 3:
                raise TheoryFormatError(
                    f"a rule needs exactly 3 formulas, got {len(chunks)}", filename, lineno
                )
            try:
                pre, just, con = (parse(c, sig(), allow_reserved=True) for c in chunks)
            except Exception as exc:
                raise TheoryFormatError(str(exc), filename, lineno) from None
            rules.append(DefaultRule(pre, just, con))
        else:
            raise TheoryFormatError("expected a 'W:' or 'D:' section first", filename, lineno)

    used: set[BoolFun] = set()
    for f in w_forms + [x for d in rules for x in d.formulas()] + ([goal] if goal else []):
        used |= connectives(f)
    signature = frozenset(set(declared.values()) | {f for f in used if f.name in BUILTINS})
    theory = DefaultTheory(tuple(dict.fromkeys(w_forms)), tuple(rules), signature)
    return theory, goal


def write_theory(theory: DefaultTheory, goal: Formula | None = None) -> str:
    lines: list[str] = []
    for f in sorted(theory.signature, key=lambda f: f.name):
        if f.name not in BUILTINS:
            lines.append(f"defconn {f.name} {f.arity} {f.table}")
    lines.append("W:")
    lines.extend(serialize(w) for w in theory.W)
    lines.append("D:")
    for d in theory.D:
        lines.append(
            f"(default {serialize(d.prerequisite)} {serialize(d.justification)} "
            f"{serialize(d.consequent)})"
        )
    if goal is not None:
        lines.append(f"goal: {serialize(goal)}")
    return "\n".join(lines) + "\n"


def read_dimacs(text: str, filename: str = "<input>") -> CnfFormula:
    """DIMACS CNF: 'p cnf VARS CLAUSES' then 0-terminated clause lines."""
    n_vars = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("c", "%")):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise TheoryFormatError("expected 'p cnf VARS CLAUSES'", filename, lineno)
            n_vars = int(parts[2])
            continue
        if n_vars is None:
            raise TheoryFormatError("clause before the 'p cnf' header", filename, lineno)
        try:
            lits = [int(t) for t in line.split()]
        except ValueError:
            raise TheoryFormatError("clause lines are integers", filename, lineno) from None
        for lit in lits:
            if lit == 0:
                clauses.append(tuple(pending))
                pending = []
            else:
                pending.append(lit)
    if pending:
        clauses.append(tuple(pending))
    if n_vars is None:
        raise TheoryFormatError("missing 'p cnf' header", filename)
    return CnfFormula(n_vars, tuple(clauses))


_NODE_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_]*$")


def _check_node(name: str, filename: str, lineno: int) -> str:
    if not _NODE_RE.match(name):
        raise TheoryFormatError(f"bad node name {name!r}", filename, lineno)
    return name


def read_digraph(text: str, filename: str = "<input>"):
    """Edge-list text: 's NODE', 't NODE', optional 'node NODE', and
    'edge U V' lines.  Returns (Digraph, s, t)."""
    nodes: dict[str, None] = {}
    edges: list[tuple[str, str]] = []
    s = t = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        parts = line.split()
        kw = parts[0].lower()
        if kw == "s" and len(parts) == 2:
            s = _check_node(parts[1], filename, lineno)
            nodes.setdefault(s)
        elif kw == "t" and len(parts) == 2:
            t = _check_node(parts[1], filename, lineno)
            nodes.setdefault(t)
        elif kw == "node" and len(parts) == 2:
            nodes.setdefault(_check_node(parts[1], filename, lineno))
        elif kw == "edge" and len(parts) == 3:
            u, v = (_check_node(p, filename, lineno) for p in parts[1:])
            nodes.setdefault(u)
            nodes.setdefault(v)
            edges.append((u, v))
        else:
            raise TheoryFormatError(f"bad line {line!r}", filename, lineno)
    if s is None or t is None:
        raise TheoryFormatError("need 's NODE' and 't NODE' lines", filename)
    return Digraph(tuple(nodes), tuple(edges)), s, t


def read_hypergraph(text: str, filename: str = "<input>"):
    """Edge-list text: 'source NODE' (or 'sources A B ..'), 'target NODE',
    optional 'node NODE', and 'hedge SRC[,SRC2] DEST' lines.
    Returns (Hypergraph, sources, target)."""
    nodes: dict[str, None] = {}
    edges: list[tuple[tuple[str, ...], str]] = []
    sources: list[str] = []
    target = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        parts = line.split()
        kw = parts[0].lower()
        if kw == "source" and len(parts) == 2:
            sources.append(_check_node(parts[1], filename, lineno))
            nodes.setdefault(sources[-1])
        elif kw == "sources":
            for p in parts[1:]:
                sources.append(_check_node(p, filename, lineno))
                nodes.setdefault(sources[-1])
        elif kw == "target" and len(parts) == 2:
            target = _check_node(parts[1], filename, lineno)
            nodes.setdefault(target)
        elif kw == "node" and len(parts) == 2:
            nodes.setdefault(_check_node(parts[1], filename, lineno))
        elif kw == "hedge" and len(parts) == 3:
            srcs = tuple(_check_node(p, filename, lineno) for p in parts[1].split(","))
            dest = _check_node(parts[2], filename, lineno)
            for x in srcs:
                nodes.setdefault(x)
            nodes.setdefault(dest)
            edges.append((srcs, dest))
        else:
            raise TheoryFormatError(f"bad line {line!r}", filename, lineno)
    if target is None:
        raise TheoryFormatError("need a 'target NODE' line", filename)
    return Hypergraph(tuple(nodes), tuple(edges)), sources, target


_SNSAT_LIT_RE = re.compile(r"^(-?)([xz])(\d+)$")


def read_snsat(text: str, filename: str = "<input>") -> SnsatInstance:
    """Sectioned chain-CNF text: each 'formula' line opens the next formula
    of the chain; clause lines hold literals like 'x1 -z2 z3' (x = chain
    variable, z = local variable), optionally 0-terminated; an optional
    'zvars K' line declares the local variable count."""
    m: list[int] = []
    clauses: list[list[tuple]] = []
    declared: list[int | None] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        parts = line.split()
        if parts[0].lower() == "formula":
            m.append(0)
            declared.append(None)
            clauses.append([])
            continue
        if parts[0].lower() == "zvars" and len(parts) == 2:
            if not m:
                raise TheoryFormatError("zvars before any 'formula' line", filename, lineno)
            declared[-1] = int(parts[1])
            continue
        if not m:
            raise TheoryFormatError("clause before any 'formula' line", filename, lineno)
        clause = []
        for tok in parts:
            if tok == "0":
                continue
            mt = _SNSAT_LIT_RE.match(tok)
            if not mt:
                raise TheoryFormatError(f"bad literal {tok!r}", filename, lineno)
            sign = -1 if mt.group(1) else 1
            kind = mt.group(2)
            j = int(mt.group(3))
            clause.append((kind, j, sign))
            if kind == "z":
                m[-1] = max(m[-1], j)
        clauses[-1].append(tuple(clause))
    if not m:
        raise TheoryFormatError("no 'formula' sections", filename)
    ms = tuple(max(mi, d or 0) for mi, d in zip(m, declared))
    return SnsatInstance(ms, tuple(tuple(cls) for cls in clauses))
