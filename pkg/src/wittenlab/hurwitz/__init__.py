"""Hurwitz numbers: exhaustive counting, characters, transforms, cut-and-join."""

from .characters import CharacterTable, central_character, character_table, frobenius_hurwitz, mn_character
from .cutjoin import CutJoinSides, cut_join_sides, cutjoin_hurwitz_check, hurwitz_gamma
from .factorizations import (
    BRUTE_FORCE_BUDGET,
    BudgetError,
    HurwitzKey,
    factorization_count_bruteforce,
    factorization_profile,
    hurwitz_number,
    simple_branch_count,
    single_hurwitz,
)
from .kernel import BACKEND, compiled_available
from .transform import ClosureError, connected_disconnected_transform, required_keys

FROBENIUS_MAX_DEGREE = 8


def factorization_count_frobenius(key: HurwitzKey):
    """Disconnected count from the character table, for d <= 8."""
    if key.connected:
        raise ValueError("the character formula gives disconnected counts only")
    if key.degree > FROBENIUS_MAX_DEGREE:
        raise BudgetError(f"character tables limited to d <= {FROBENIUS_MAX_DEGREE}")
    return frobenius_hurwitz(key.nu, key.mu, key.r)


__all__ = [
    "BACKEND",
    "BRUTE_FORCE_BUDGET",
    "BudgetError",
    "CharacterTable",
    "ClosureError",
    "CutJoinSides",
    "FROBENIUS_MAX_DEGREE",
    "HurwitzKey",
    "central_character",
    "character_table",
    "compiled_available",
    "connected_disconnected_transform",
    "cut_join_sides",
    "cutjoin_hurwitz_check",
    "factorization_count_bruteforce",
    "factorization_count_frobenius",
    "factorization_profile",
    "frobenius_hurwitz",
    "hurwitz_gamma",
    "hurwitz_number",
    "mn_character",
    "required_keys",
    "simple_branch_count",
    "single_hurwitz",
]
