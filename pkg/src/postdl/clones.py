"""Clone analysis of a connective set and complexity-case dispatch.

The connective set B generates a function clone [B].  Everything the
decision problems need to know about [B] is captured by (a) which of the
property-defined clones contain [B] (subset flags, computed per function)
and (b) which small named clones are contained in [B] (contains flags,
decided on the arity-3 slice of [B], a subset of the 256 ternary tables).

``dispatch_case`` evaluates the complexity-case conditions for
extension existence, credulous and skeptical reasoning, hardest cases
first, and selects an engine per problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .boolfun import BUILTINS, BoolFun, signature_map
from .errors import ArityUnsupported, UnknownClone
from .properties import FunSignature, function_signature

# ternary projections as 8-bit tables (bit i = value at assignment i)
_PROJ = (0xAA, 0xCC, 0xF0)

SUBSET_CLONES = ("R1", "M", "L", "L1", "V", "E", "N", "I")
CONTAINS_CLONES = ("S1", "D", "S11", "S00", "S10", "D2", "N2", "L0", "L2", "V2", "E2", "I2")


@dataclass(frozen=True)
class Slice3:
    """The arity-3 members of [B], as a set of 8-bit truth-table codes."""

    members: frozenset[int]

    def __contains__(self, table8: int) -> bool:
        return table8 in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: "Slice3") -> bool:
        return self.members <= other.members


def ternary_lift(f: BoolFun) -> int:
    """f as a ternary function on its first arity arguments (8-bit code)."""
    if f.arity > 3:
        raise ArityUnsupported(f"cannot lift arity {f.arity} to the ternary slice")
    mask = (1 << f.arity) - 1
    out = 0
    for i in range(8):
        if f.value_at(i & mask):
            out |= 1 << i
    return out


def _apply_bitwise(f: BoolFun, args: list[np.ndarray]) -> np.ndarray:
    """Apply f pointwise to ternary tables packed as uint8 arrays."""
    shape = np.broadcast_shapes(*(a.shape for a in args)) if args else ()
    res = np.zeros(shape, dtype=np.uint8)
    for r in range(f.n_points):
        if not f.value_at(r):
            continue
        term = np.full(shape, 0xFF, dtype=np.uint8)
        for j, a in enumerate(args):
            term &= a if (r >> j) & 1 else ~a
        res |= term
    return res


@lru_cache(maxsize=256)
def _closure_cached(conns: frozenset[BoolFun]) -> frozenset[int]:
    for f in conns:
        if f.arity > 3:
            raise ArityUnsupported(
                f"connective {f.name!r} has arity {f.arity} > 3; slice closure unsupported"
            )
    current: set[int] = set(_PROJ)
    frontier: set[int] = set(current)
    while frontier and len(current) < 256:
        full = np.array(sorted(current), dtype=np.uint8)
        new = np.array(sorted(frontier), dtype=np.uint8)
        seen = np.zeros(256, dtype=bool)

        def add(arr: np.ndarray) -> None:
            seen[arr.ravel()] = True

        for f in conns:
            if f.arity == 0:
                seen[0xFF if f.bits & 1 else 0x00] = True
            elif f.arity == 1:
                add(_apply_bitwise(f, [new]))
            elif f.arity == 2:
                a, b = new[:, None], full[None, :]
                add(_apply_bitwise(f, [a, b]))
                add(_apply_bitwise(f, [b, a]))
            else:
                n1, f1 = new[:, None, None], full[:, None, None]
                n2, f2 = new[None, :, None], full[None, :, None]
                n3, f3 = new[None, None, :], full[None, None, :]
                for combo in ([n1, f2, f3], [f1, n2, f3], [f1, f2, n3]):
                    add(_apply_bitwise(f, combo))
        produced = set(np.flatnonzero(seen).tolist())
        frontier = produced - current
        current |= frontier
    return frozenset(current)


def slice3_closure(signature) -> Slice3:
    """Least set of ternary tables containing the projections and closed
    under applying every connective of the signature."""
    sig = signature_map(signature)
    return Slice3(_closure_cached(frozenset(sig.values())))


# Bases of the named clones used in contains tests, from the standard
# clone table; 0-ary base members are checked via the constant ternary table.
_CONTAINS_BASES: dict[str, tuple[BoolFun, ...]] = {
    "S1": (BUILTINS["nimp"],),
    "D": (BUILTINS["dbase"],),
    "S11": (BUILTINS["s10"], BUILTINS["bot"]),
    "S00": (BUILTINS["s00"],),
    "S10": (BUILTINS["s10"],),
    "D2": (BUILTINS["maj"],),
    "N2": (BUILTINS["not"],),
    "L0": (BUILTINS["xor"],),
    "L2": (BUILTINS["xor3"],),
    "V2": (BUILTINS["or"],),
    "E2": (BUILTINS["and"],),
    "I2": (BUILTINS["id"],),
}


def contains_clone(slice3: Slice3, clone: str) -> bool:
    """True iff the named clone is contained in [B], decided by base
    membership in the ternary slice."""
    base = _CONTAINS_BASES.get(clone)
    if base is None:
        raise UnknownClone(f"no contains-test for clone {clone!r}")
    return all(ternary_lift(f) in slice3 for f in base)


def _satisfies(sig: FunSignature, clone: str) -> bool:
    if clone == "R1":
        return sig.reproducing1
    if clone == "M":
        return sig.monotone
    if clone == "L":
        return sig.linear
    if clone == "L1":
        return sig.linear and sig.reproducing1
    if clone == "V":
        return sig.is_or_shape
    if clone == "E":
        return sig.is_and_shape
    if clone == "N":
        return len(sig.depends_on) <= 1
    if clone == "I":
        return sig.is_projection or sig.is_constant
    raise UnknownClone(f"no property test for clone {clone!r}")


def subset_of_clone(signature, clone: str) -> bool:
    """True iff [B] is contained in the property-defined clone, i.e. every
    connective satisfies the clone's defining property."""
    sig = signature_map(signature)
    return all(_satisfies(function_signature(f), clone) for f in sig.values())


@dataclass(frozen=True)
class CloneReport:
    """Where [B] sits relative to the clones the case analysis tests, the
    complexity case of each decision problem, and the engine to run."""

    properties: dict[str, FunSignature]
    subset: frozenset[str]
    contains: frozenset[str]
    ext_case: str
    cred_case: str
    skep_case: str
    engines: dict[str, str]
    warnings: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "properties": {name: s.to_json() for name, s in sorted(self.properties.items())},
            "subset": sorted(self.subset),
            "contains": sorted(self.contains),
            "cases": {"ext": self.ext_case, "cred": self.cred_case, "skep": self.skep_case},
            "engines": dict(self.engines),
            "warnings": list(self.warnings),
        }


def _pick(problem: str, named: list[tuple[bool, str, str]]) -> tuple[str, str]:
    hits = [(case, engine) for ok, case, engine in named if ok]
    if len(hits) != 1:
        matched = [case for ok, case, _ in named if ok]
        raise AssertionError(
            f"classifier bug: {problem} matched cases {matched}; expected exactly one"
        )
    return hits[0]


def dispatch_case(signature) -> CloneReport:
    """Classify [B] and pick a sound engine per decision problem.

    Case conditions are checked from hardest to easiest; the derived
    predicates are pairwise disjoint and a loud assertion fires if the
    analysis ever matches zero or two cases.
    Connectives of arity above 3 make containment tests unavailable: the
    report then carries exact subset flags, no contains flags, case labels
    "unknown" and the always-sound generic engine, plus a warning.
    """
    sig = signature_map(signature)
    props = {name: function_signature(f) for name, f in sig.items()}
    subset = frozenset(c for c in SUBSET_CLONES if all(_satisfies(props[n], c) for n in sig))

    if any(f.arity > 3 for f in sig.values()):
        return CloneReport(
            properties=props,
            subset=subset,
            contains=frozenset(),
            ext_case="unknown",
            cred_case="unknown",
            skep_case="unknown",
            engines={"ext": "generic", "cred": "generic", "skep": "generic"},
            warnings=(
                "signature has connectives of arity > 3; clone containment "
                "is undecided and the generic engine is used",
            ),
        )

    sl = slice3_closure(sig)
    contains = frozenset(c for c in CONTAINS_CLONES if contains_clone(sl, c))

    def sub(c: str) -> bool:
        return c in subset

    def has(c: str) -> bool:
        return c in contains

    top_hard = has("S1") or has("D")
    delta = has("S11") and sub("M")
    affine_np = sub("L") and not sub("R1") and not sub("I")
    ev_p = (sub("E") or sub("V")) and not sub("R1") and not sub("I")
    nl_proper = sub("I") and not sub("R1")

    ext_case, ext_engine = _pick(
        "ext",
        [
            (top_hard, "SigmaP2", "generic"),
            (delta, "DeltaP2", "monotone_iterative"),
            (affine_np, "NP", "affine_guess"),
            (ev_p, "P", "poly_fragment"),
            (nl_proper, "NL", "reachability"),
            (sub("R1") and not top_hard and not delta, "trivial", "trivial_yes"),
        ],
    )

    cred_conp = (has("S00") or has("S10") or has("D2")) and sub("R1")
    frag_p = (
        (has("V2") and sub("V"))
        or (has("E2") and sub("E"))
        or (sub("L1") and not sub("I"))
    )
    cred_case, cred_engine = _pick(
        "cred",
        [
            (top_hard, "SigmaP2", "generic"),
            (delta, "DeltaP2", "monotone_iterative"),
            (cred_conp, "coNP", "r1_unique"),
            (affine_np, "NP", "affine_guess"),
            (frag_p, "P", "poly_fragment"),
            (sub("I"), "NL", "reachability"),
        ],
    )

    # Within R1 the extension is unique, so skeptical membership above
    # D2 coincides with credulous membership and stays in coNP.
    skep_conp = (
        (has("S00") or has("S10") or has("D2") or has("N2") or has("L0"))
        and (sub("R1") or sub("M") or sub("L"))
        and not delta
    )
    skep_case, skep_engine = _pick(
        "skep",
        [
            (top_hard, "PiP2", "generic"),
            (delta, "DeltaP2", "monotone_iterative"),
            (skep_conp, "coNP", "r1_unique" if sub("R1") else "affine_guess"),
            (frag_p, "P", "poly_fragment"),
            (sub("I"), "NL", "reachability"),
        ],
    )

    return CloneReport(
        properties=props,
        subset=subset,
        contains=contains,
        ext_case=ext_case,
        cred_case=cred_case,
        skep_case=skep_case,
        engines={"ext": ext_engine, "cred": cred_engine, "skep": skep_engine},
    )
