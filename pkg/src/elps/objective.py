"""Classical satisfaction, the objective reduct, stable models and splitting.

Stable models are computed by the definitional enumeration: every candidate
interpretation over the atom universe is checked to be a ⊆-minimal model of
the reduct.  Minimality only needs to look at proper subsets of the candidate
(a smaller incomparable model never witnesses non-minimality), which cuts the
search from 4^n to 2^n·2^|I|.  A second, set-based implementation path is kept
around as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_LIMITS, SolverLimits
from .errors import CapacityError, NotASplittingSet, NotObjectiveError
from .syntax import (
    BOT,
    TOP,
    Atom,
    ObjLit,
    Program,
    Rule,
    SubjLit,
    atom_key,
    atoms_of,
    const_truth,
)

Interpretation = frozenset  # of Atom


def _objlit_truth(lit: ObjLit, interp: Interpretation) -> bool:
    value = const_truth(lit)
    if value is None:
        value = lit.base in interp
        if lit.negs % 2 == 1:
            value = not value
    return value


def classical_satisfies(interp: Interpretation, construct) -> bool:
    """Classical reading: comma = conjunction, not = negation, head = disjunction."""
    if isinstance(construct, SubjLit):
        raise NotObjectiveError(f"subjective literal {construct} in a classical context")
    if isinstance(construct, ObjLit):
        return _objlit_truth(construct, interp)
    if isinstance(construct, Rule):
        body_true = all(classical_satisfies(interp, l) for l in construct.body)
        return not body_true or any(a in interp for a in construct.head)
    if isinstance(construct, Program):
        return all(classical_satisfies(interp, r) for r in construct.rules)
    raise TypeError(f"unsupported construct {construct!r}")


def objective_reduct(program: Program, interp: Interpretation) -> Program:
    """Replace each maximal negated literal by ⊤/⊥ per its truth in interp."""
    rules = []
    for rule in program.rules:
        body = []
        for lit in rule.body:
            if isinstance(lit, SubjLit):
                raise NotObjectiveError(f"subjective literal {lit} in objective reduct")
            if lit.negs == 0:
                body.append(lit)
            else:
                body.append(ObjLit(TOP if _objlit_truth(lit, interp) else BOT))
        rules.append(Rule(rule.head, tuple(body)))
    return Program.of(rules, program.extra_atoms)


def _compile(program: Program, index: dict[Atom, int]):
    """Bitmask form: (dead, head, pos, not1, not2) per rule.

    A rule survives the reduct for candidate mask m iff not dead,
    m & not1 == 0 and m & not2 == not2; its reduct is then head <- pos.
    """
    compiled = []
    for rule in program.rules:
        head = 0
        for a in rule.head:
            head |= 1 << index[a]
        pos = not1 = not2 = 0
        dead = False
        for lit in rule.body:
            if isinstance(lit, SubjLit):
                raise NotObjectiveError(f"subjective literal {lit} in stable-model search")
            value = const_truth(lit)
            if value is not None:
                if value is False:
                    dead = True
                continue
            bit = 1 << index[lit.base]
            if lit.negs == 0:
                pos |= bit
            elif lit.negs == 1:
                not1 |= bit
            else:
                not2 |= bit
        compiled.append((dead, head, pos, not1, not2))
    return compiled


def stable_models(program: Program, limits: SolverLimits = DEFAULT_LIMITS) -> frozenset[Interpretation]:
    """All ⊆-minimal models I of the reduct w.r.t. I, over the atom universe."""
    atoms = sorted(program.atom_universe, key=atom_key)
    if len(atoms) > limits.max_atoms:
        raise CapacityError(
            f"{len(atoms)} atoms exceed the exhaustive-search cap of {limits.max_atoms}"
        )
    index = {a: i for i, a in enumerate(atoms)}
    compiled = _compile(program, index)
    models = []
    for m in range(1 << len(atoms)):
        reduct = [
            (head, pos)
            for (dead, head, pos, not1, not2) in compiled
            if not dead and not (m & not1) and (m & not2) == not2
        ]
        if any((m & pos) == pos and not (m & head) for head, pos in reduct):
            continue
        # minimality: any model among proper submasks disqualifies m
        minimal = True
        if m:
            sub = (m - 1) & m
            while True:
                if not any((sub & pos) == pos and not (sub & head) for head, pos in reduct):
                    minimal = False
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & m
        if minimal:
            models.append(frozenset(a for a in atoms if m & (1 << index[a])))
    return frozenset(models)


def stable_models_ref(program: Program, limits: SolverLimits = DEFAULT_LIMITS) -> frozenset[Interpretation]:
    """Independent oracle path: minimal models taken over all subsets."""
    atoms = sorted(program.atom_universe, key=atom_key)
    if len(atoms) > limits.max_atoms:
        raise CapacityError(
            f"{len(atoms)} atoms exceed the exhaustive-search cap of {limits.max_atoms}"
        )
    subsets = [frozenset(a for i, a in enumerate(atoms) if m & (1 << i)) for m in range(1 << len(atoms))]
    result = []
    for candidate in subsets:
        reduct = objective_reduct(program, candidate)
        all_models = [i for i in subsets if classical_satisfies(i, reduct)]
        minimal = [i for i in all_models if not any(j < i for j in all_models)]
        if candidate in minimal:
            result.append(candidate)
    return frozenset(result)


@dataclass
class ObjectiveSplit:
    U: frozenset[Atom]
    bottom: Program
    top: Program
    placement: dict[Rule, str]


def objective_split(program: Program, U, placement: str = "bottom") -> ObjectiveSplit:
    """Partition per the splitting-set conditions; `placement` decides where
    rules satisfying both conditions (constraints on U) go."""
    if placement not in ("bottom", "top"):
        raise ValueError(f"placement must be 'bottom' or 'top', got {placement!r}")
    U = frozenset(U)
    bottom, top = [], []
    record: dict[Rule, str] = {}
    violators = []
    for rule in program.rules:
        cond_i = atoms_of(rule) <= U
        cond_ii = not (rule.head & U)
        if cond_i and cond_ii:
            record[rule] = placement
            (bottom if placement == "bottom" else top).append(rule)
        elif cond_i:
            record[rule] = "bottom"
            bottom.append(rule)
        elif cond_ii:
            record[rule] = "top"
            top.append(rule)
        else:
            violators.append(rule)
    if violators:
        raise NotASplittingSet(violators)
    return ObjectiveSplit(U, Program.of(bottom), Program.of(top), record)


def simplify_top(top: Program, U, interp: Interpretation) -> Program:
    """Replace every atom of U in the top by ⊤ if it holds in interp, else ⊥."""
    U = frozenset(U)

    def sub(lit: ObjLit) -> ObjLit:
        if isinstance(lit, SubjLit):
            raise NotObjectiveError(f"subjective literal {lit} in objective top")
        if lit.atom in U:
            return ObjLit(TOP if lit.base in interp else BOT, lit.negs)
        return lit

    rules = []
    for rule in top.rules:
        if rule.head & U:
            raise NotASplittingSet([rule])
        rules.append(Rule(rule.head, tuple(sub(l) for l in rule.body)))
    return Program.of(rules)


def objective_solutions(
    program: Program,
    U,
    placement: str = "bottom",
    limits: SolverLimits = DEFAULT_LIMITS,
) -> frozenset[tuple[Interpretation, Interpretation]]:
    """All pairs (I_b, I_t) with I_b stable in the bottom and I_t stable in the
    simplified top."""
    split = objective_split(program, U, placement)
    pairs = []
    for i_b in stable_models(split.bottom, limits):
        simplified = simplify_top(split.top, split.U, i_b)
        for i_t in stable_models(simplified, limits):
            pairs.append((i_b, i_t))
    return frozenset(pairs)
