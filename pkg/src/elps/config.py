"""Search caps for the exhaustive procedures.

The solver is a desk-scale oracle: every enumeration is bounded and refuses
(with CapacityError) instead of running away.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

ENV_MAX_ATOMS = "ELP_MAX_ATOMS"


@dataclass(frozen=True)
class SolverLimits:
    max_atoms: int = 20          # stable-model candidate enumeration (2^n interpretations)
    max_guesses: int = 4096      # modal-guess space for world-view search (2^#cores)
    brute_max_atoms: int = 4     # direct world-view enumeration over 2^(2^n)
    f15_max_atoms: int = 3       # EHT equilibrium machinery
    founded_max_atoms: int = 12  # unfounded-pair fixpoint
    split_enum_max_atoms: int = 12

    def with_max_atoms(self, n: int) -> "SolverLimits":
        return dataclasses.replace(self, max_atoms=n)


DEFAULT_LIMITS = SolverLimits()


def resolve_limits(max_atoms: int | None = None) -> SolverLimits:
    """Build limits for the CLI: ELP_MAX_ATOMS env var overrides the cap."""
    env = os.environ.get(ENV_MAX_ATOMS)
    if env is not None:
        try:
            return DEFAULT_LIMITS.with_max_atoms(int(env))
        except ValueError as exc:
            raise ValueError(f"{ENV_MAX_ATOMS} must be an integer, got {env!r}") from exc
    if max_atoms is not None:
        return DEFAULT_LIMITS.with_max_atoms(max_atoms)
    return DEFAULT_LIMITS
