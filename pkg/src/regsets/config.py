"""Tunable size caps and search budgets."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import ParseError

ENV_MAX_ORDER = "REGSET_MAX_ORDER"


@dataclass(frozen=True)
class Limits:
    """Resource caps; all sizes are in group elements unless noted."""

    closure_cap: int = 5000
    enumeration_cap: int = 48
    # full O(n^3) associativity check up to this order, random triples above it
    assoc_exhaustive_max: int = 512
    assoc_sample_triples: int = 100_000
    search_node_budget: int = 5_000_000
    # below this vertex count adjacency lists are materialized
    adjacency_vertex_cap: int = 4096


DEFAULT_LIMITS = Limits()


def limits_from_env(base: Limits | None = None) -> Limits:
    """Return ``base`` with caps overridden from the environment."""
    base = base if base is not None else DEFAULT_LIMITS
    raw = os.environ.get(ENV_MAX_ORDER)
    if raw is None:
        return base
    try:
        value = int(raw)
    except ValueError as exc:
        raise ParseError(f"{ENV_MAX_ORDER} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ParseError(f"{ENV_MAX_ORDER} must be positive, got {value}")
    return replace(
        base,
        enumeration_cap=value,
        closure_cap=max(base.closure_cap, value),
    )
