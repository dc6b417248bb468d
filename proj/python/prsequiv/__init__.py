"""Equivalence checking for process rewrite systems."""

from ._prsequiv import (
    Error,
    IncompleteLtsError,
    LimitExceeded,
    Lts,
    ParseError,
    PreconditionError,
    System,
    bisim_classes,
    cli,
    dd,
    eval_qbf,
    fact,
    game,
    kbisim_classes,
    load_system,
    model_check,
    nbpa_bisimilar,
    parse_system,
    run_minsky,
    simulated_by,
    trace_included,
    weak_bisim_classes,
)

__all__ = [
    "Error",
    "IncompleteLtsError",
    "LimitExceeded",
    "Lts",
    "ParseError",
    "PreconditionError",
    "System",
    "bisim_classes",
    "cli",
    "dd",
    "eval_qbf",
    "fact",
    "game",
    "kbisim_classes",
    "load_system",
    "model_check",
    "nbpa_bisimilar",
    "parse_system",
    "run_minsky",
    "simulated_by",
    "trace_included",
    "weak_bisim_classes",
]
