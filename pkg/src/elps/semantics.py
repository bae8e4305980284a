"""World views for the reduct-based semantics G91, G11 and K15, the
selection-based S17, and a brute-force oracle for all of them.

The fast path guesses a truth value for every distinct subjective-literal
core, builds the corresponding reduct, and accepts the stable-model set iff
it reproduces the guess.  The guess space is over cores, not occurrences:
the reducts only depend on whether the candidate world view satisfies each
core.  Verification always re-evaluates every core against the computed
world view; the K-implies-M pruning is an optimisation on top.

The brute-force oracle enumerates candidate world views directly against the
defining fixpoint (no guessing) and is the provenance source for the
randomized differential tests.
"""

from __future__ import annotations

import enum
from typing import Mapping

from .config import DEFAULT_LIMITS, SolverLimits
from .errors import CapacityError, UnsupportedMLiteral
from .modal import WorldView, modal_satisfies, subjective_reduct
from .objective import stable_models
from .syntax import (
    BOT,
    TOP,
    ObjLit,
    Program,
    Rule,
    SubjLit,
    atom_key,
    default_negate,
)


class SemanticsId(enum.Enum):
    G91 = "g91"
    G11 = "g11"
    K15 = "k15"
    S17 = "s17"
    F15 = "f15"
    C19 = "c19"

    @classmethod
    def from_string(cls, text: str) -> "SemanticsId":
        try:
            return cls(text.lower())
        except ValueError:
            names = ", ".join(s.value for s in cls)
            raise ValueError(f"unknown semantics {text!r}; expected one of {names}") from None

    def __str__(self) -> str:
        return self.value


ModalGuess = Mapping[SubjLit, bool]

_REDUCT_SEMANTICS = (SemanticsId.G91, SemanticsId.G11, SemanticsId.K15)


def subjective_cores(program: Program) -> tuple[SubjLit, ...]:
    cores = {l.core() for r in program.rules for l in r.body_sub}
    return tuple(sorted(cores, key=str))


def require_m_free(program: Program, semantics: SemanticsId):
    for rule in program.rules:
        for lit in rule.body_sub:
            if lit.modality == "M":
                raise UnsupportedMLiteral(
                    f"{semantics} is defined for K-literals only; found {lit} "
                    f"(rewrite with eliminate_m first)"
                )


def evaluate_cores(program: Program, wv: WorldView) -> dict[SubjLit, bool]:
    return {core: modal_satisfies(wv, frozenset(), core) for core in subjective_cores(program)}


def semantics_reduct(program: Program, guess: ModalGuess, semantics: SemanticsId) -> Program:
    """Reduct of the program under a guessed truth value per subjective core."""
    if semantics not in _REDUCT_SEMANTICS:
        raise ValueError(f"no reduct is defined for {semantics}")
    if semantics is not SemanticsId.G91:
        require_m_free(program, semantics)
    rules = []
    for rule in program.rules:
        body = []
        for lit in rule.body:
            if not isinstance(lit, SubjLit):
                body.append(lit)
                continue
            value = guess[lit.core()]
            if semantics is SemanticsId.G91:
                body.append(ObjLit(TOP if value else BOT, 1 if lit.neg else 0))
            elif not value:
                # false K l becomes ⊥ everywhere, also under `not`
                body.append(ObjLit(BOT, 1 if lit.neg else 0))
            elif semantics is SemanticsId.G11:
                if not lit.neg:
                    body.append(lit.inner)
                # a remaining `not K l` occurrence is removed from the body
            else:  # K15: remaining K l becomes l, an outer `not` keeps wrapping
                body.append(default_negate(lit.inner) if lit.neg else lit.inner)
        rules.append(Rule(rule.head, tuple(body)))
    return Program.of(rules, program.extra_atoms)


def _consistent(guess: dict[SubjLit, bool]) -> bool:
    # K l true forces M l true whenever both cores occur (wv is non-empty)
    for core, value in guess.items():
        if core.modality == "K" and value:
            twin = SubjLit("M", core.inner)
            if guess.get(twin) is False:
                return False
    return True


def world_views(
    program: Program,
    semantics: SemanticsId,
    limits: SolverLimits = DEFAULT_LIMITS,
) -> frozenset[WorldView]:
    """Guess-and-check world views for the reduct-based semantics."""
    if semantics not in _REDUCT_SEMANTICS:
        raise ValueError(f"world_views handles G91/G11/K15, not {semantics}")
    if semantics is not SemanticsId.G91:
        require_m_free(program, semantics)
    cores = subjective_cores(program)
    if 2 ** len(cores) > limits.max_guesses:
        raise CapacityError(
            f"{len(cores)} subjective cores exceed the guess cap of {limits.max_guesses}"
        )
    accepted = set()
    for bits in range(1 << len(cores)):
        guess = {core: bool(bits & (1 << i)) for i, core in enumerate(cores)}
        if not _consistent(guess):
            continue
        reduct = semantics_reduct(program, guess, semantics)
        models = stable_models(reduct, limits)
        if not models:
            continue
        wv = WorldView(models)
        if all(modal_satisfies(wv, frozenset(), core) == value for core, value in guess.items()):
            accepted.add(wv)
    return frozenset(accepted)


def _epistemic_negation_set(program: Program) -> frozenset[SubjLit]:
    return frozenset(SubjLit("K", core.inner, neg=True) for core in subjective_cores(program))


def _phi(wv: WorldView, e_pi: frozenset[SubjLit]) -> frozenset[SubjLit]:
    return frozenset(l for l in e_pi if modal_satisfies(wv, frozenset(), l))


def s17_world_views(program: Program, limits: SolverLimits = DEFAULT_LIMITS) -> frozenset[WorldView]:
    """K15 world views whose satisfied epistemic-negation set is ⊆-maximal."""
    require_m_free(program, SemanticsId.S17)
    base = world_views(program, SemanticsId.K15, limits)
    e_pi = _epistemic_negation_set(program)
    phis = {wv: _phi(wv, e_pi) for wv in base}
    return frozenset(wv for wv in base if not any(phis[other] > phis[wv] for other in base))


def _candidate_world_views(program: Program, limits: SolverLimits):
    atoms = sorted(program.atom_universe, key=atom_key)
    if len(atoms) > limits.brute_max_atoms:
        raise CapacityError(
            f"{len(atoms)} atoms exceed the brute-force cap of {limits.brute_max_atoms}"
        )
    interps = [
        frozenset(a for i, a in enumerate(atoms) if m & (1 << i)) for m in range(1 << len(atoms))
    ]
    for mask in range(1, 1 << len(interps)):
        yield WorldView.of(interps[i] for i in range(len(interps)) if mask & (1 << i))


def brute_force_world_views(
    program: Program,
    semantics: SemanticsId,
    limits: SolverLimits = DEFAULT_LIMITS,
) -> frozenset[WorldView]:
    """Enumerate every non-empty candidate world view against the defining
    condition, with no guessing.  Selection-based semantics filter the
    brute-forced base sets."""
    if semantics is SemanticsId.G91:
        found = set()
        for wv in _candidate_world_views(program, limits):
            if stable_models(subjective_reduct(program, wv), limits) == wv.interps:
                found.add(wv)
        return frozenset(found)
    if semantics in (SemanticsId.G11, SemanticsId.K15):
        require_m_free(program, semantics)
        found = set()
        for wv in _candidate_world_views(program, limits):
            reduct = semantics_reduct(program, evaluate_cores(program, wv), semantics)
            if stable_models(reduct, limits) == wv.interps:
                found.add(wv)
        return frozenset(found)
    if semantics is SemanticsId.S17:
        base = brute_force_world_views(program, SemanticsId.K15, limits)
        e_pi = _epistemic_negation_set(program)
        phis = {wv: _phi(wv, e_pi) for wv in base}
        return frozenset(wv for wv in base if not any(phis[o] > phis[wv] for o in base))
    if semantics is SemanticsId.C19:
        from .foundedness import is_founded_brute

        base = brute_force_world_views(program, SemanticsId.G91, limits)
        return frozenset(wv for wv in base if is_founded_brute(program, wv, limits))
    # F15 is definitional enumeration already; there is no second route
    from .eht import f15_world_views

    return f15_world_views(program, limits)
