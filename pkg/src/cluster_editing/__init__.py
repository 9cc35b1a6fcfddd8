"""Polynomial-time exact solver for (1,1)-cluster editing.

Every vertex may lose at most one incident edge and gain at most one new
one, further limited by per-vertex budgets in ``{0, 1}``.  :func:`solve`
reduces an instance to a sparse special class through answer-preserving
rewrites, decides that class with one constrained matching, and can lift
a verified edit certificate back to the input.
"""

from .errors import ClusterEditingError, InputError, InvariantError, UsageError
from .generators import gen_named, gen_planted, gen_random
from .graph import EditSolution, Instance, components, find_violation, is_cluster_graph
from .io import parse_certificate, parse_instance, serialize_certificate, serialize_instance
from .matching import MatchingQuery, constrained_matching, maximum_matching
from .oracle import oracle_decide, oracle_solve
from .pipeline import Answer, Verdict, lift_solution, solve, verify_solution
from .special import decide_special, extract_solution_special, partition_sets

__all__ = [
    "Answer",
    "ClusterEditingError",
    "EditSolution",
    "InputError",
    "Instance",
    "InvariantError",
    "MatchingQuery",
    "UsageError",
    "Verdict",
    "components",
    "constrained_matching",
    "decide_special",
    "extract_solution_special",
    "find_violation",
    "gen_named",
    "gen_planted",
    "gen_random",
    "is_cluster_graph",
    "lift_solution",
    "maximum_matching",
    "oracle_decide",
    "oracle_solve",
    "parse_certificate",
    "parse_instance",
    "partition_sets",
    "serialize_certificate",
    "serialize_instance",
    "solve",
    "verify_solution",
]
