"""Workbench for rewrite games on words.

Thin re-export of the compiled module; see RewriteSystem.parse as the usual
entry point.
"""

from ._rgw import (
    BudgetError,
    DomainError,
    MooreMachine,
    ParseError,
    RewriteSystem,
    TmGame,
    isomorphic,
    load_fixture,
    minimize,
    octal_crosscheck,
    octal_period,
    octal_sequence,
    octal_to_rewrite,
    pda_run,
    synthesize,
    tm_game,
    verify,
    witness_word,
)

__all__ = [
    "BudgetError",
    "DomainError",
    "MooreMachine",
    "ParseError",
    "RewriteSystem",
    "TmGame",
    "isomorphic",
    "load_fixture",
    "minimize",
    "octal_crosscheck",
    "octal_period",
    "octal_sequence",
    "octal_to_rewrite",
    "pda_run",
    "synthesize",
    "tm_game",
    "verify",
    "witness_word",
]
