"""Termination checking of logic programs with negation."""

import json

from . import _core
from ._core import ParseError, expanded_variant, is_variant, mgu, parse_program, size


def analyze(program, queries, depth_bound=2, max_nodes=1_000_000, occurs_check=True, ev_mode="subterm"):
    """Verdict for `queries` against `program` as a dict (the JSON schema of the CLI)."""
    if isinstance(queries, str):
        queries = [queries]
    return json.loads(_core.analyze(program, list(queries), depth_bound, max_nodes, occurs_check, ev_mode, "json"))


def render(program, queries, format="text", **kwargs):
    """Verdict rendered as text, json or dot."""
    if isinstance(queries, str):
        queries = [queries]
    return _core.analyze(program, list(queries), format=format, **kwargs)


__all__ = ["ParseError", "analyze", "expanded_variant", "is_variant", "mgu", "parse_program", "render", "size"]
