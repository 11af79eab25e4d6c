"""Kauffman bracket, colored Jones polynomials and tail stability of pretzel links."""

import json

from ._skein import (
    BudgetError,
    Diagram,
    InsufficientWindowError,
    ParseError,
    PreconditionError,
    RangeError,
    SkeinError,
    bracket,
    circle_count_minus,
    circle_count_plus,
    colored_bracket,
    from_json,
    is_adequate,
    is_alternating,
    is_minus_adequate,
    jones_window,
    minus_graph_dot,
    mirror,
    n_equivalent,
    normalize,
    parse_pd,
    predicted_min_degree,
    pretzel,
    reduced_jones,
    stable_prefix,
    unknot,
)
from ._skein import family_tail as _family_tail
from ._skein import verify as _verify


def family_tail(family, color="2", k_min=1, k_max=1, rate="k+1", projector_color=False, threads=0):
    """Checks consecutive members at the given rate; returns the report as a dict."""
    return json.loads(_family_tail(family, str(color), k_min, k_max, rate, projector_color, threads))


def verify(suite):
    """Runs a verification suite; returns the report as a dict."""
    return json.loads(_verify(suite))


__all__ = [name for name in dir() if not name.startswith("_")] + ["family_tail", "verify"]
