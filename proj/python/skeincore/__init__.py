"""Canonical normal forms and evaluation of stated skein elements."""

from ._skeincore import (
    eval_web,
    nilpotent,
    normalize,
    relation_report,
    route_residual,
    split_residual,
)

__all__ = [
    "eval_web",
    "nilpotent",
    "normalize",
    "relation_report",
    "route_residual",
    "split_residual",
]
