"""Induced matching toolkit.

Thin wrapper around the compiled core: graphs, the exact oracle, the
certified constructive algorithm, the greedy baseline, generators,
closed-form bounds, and the small-graph conjecture scanner.
"""

import json as _json
from fractions import Fraction as _Fraction

from ._core import (  # noqa: F401
    DEFAULT_NODE_BUDGET,
    ExactResult,
    Graph,
    NeighborhoodProfile,
    RunResult,
    RunTrace,
    StepRecord,
    __version__,
    attach_pendants,
    bound_B,
    c5_blowup,
    closed_union,
    complete_graph,
    conflict_edges,
    conflict_graph,
    conjecture_check,
    connected_components,
    constructive_run,
    cycle_graph,
    disjoint_copies,
    disjoint_union,
    greedy_induced_matching,
    helper_inequality_check,
    is_induced_matching,
    is_isomorphic_small,
    isolated_after_removal,
    matching_violation,
    neighborhood_profile,
    nu_s_bruteforce,
    nu_s_exact,
    pad_pendant_holders,
    parse_edge_list,
    path_graph,
    random_graph,
    random_regular,
    remove_vertices,
    select_edge,
    sharpness_h1,
    sharpness_h2,
    star_graph,
    strip_isolated,
    theorem_guarantee,
    trivial_guarantee,
    write_edge_list,
)
from ._core import _scan_exhaustive_json, _scan_random_json
from ._core import potential as _potential_strings


def potential(g, delta):
    """Exact per-vertex potentials as `fractions.Fraction` values."""
    return [_Fraction(s) for s in _potential_strings(g, delta)]


def run_exhaustive_scan(max_n, budget=DEFAULT_NODE_BUDGET):
    """Scan all connected graphs up to ``max_n`` (at most 7) vertices."""
    return _json.loads(_scan_exhaustive_json(max_n, budget))


def run_random_scan(trials, max_n, seed, budget=DEFAULT_NODE_BUDGET):
    """Randomized conjecture probing, deterministic under ``seed``."""
    return _json.loads(_scan_random_json(trials, max_n, seed, budget))
